# pylint: disable=missing-module-docstring

from .binomial import (
    T,
    BinomialSeq,
    binomial_convolution_check,
    binomial_from_phi,
    binomial_generator,
    binomial_identities,
    binomial_identity_suite,
    both_or_none_check,
    connection_polys,
    derivative_at_zero,
    falling_in_t,
    is_binomial,
    mullin_rota_check,
    mullin_rota_connect,
    recover_sequence,
    rescale,
    transfer_sequence,
    yang_check,
    yang_form,
)
from .knuth_pittel import (
    knuth_pittel,
    knuth_pittel_coefficient,
    knuth_pittel_coefficients,
    knuth_pittel_generator,
    knuth_pittel_sequence,
    knuth_pittel_via_bell,
    knuth_pittel_via_series,
    single_cycle_count,
    tree_function,
)
from .lagrange import (
    FormCase,
    SeriesForm,
    conversion_constants,
    conversion_round_trip,
    gamma,
    gamma_bar,
    lagrange_conversion_check,
    lagrange_round_trip,
    lambda_classical,
    lambda_classical_via_full_bell,
    lambda_classical_via_stirling,
    lambda_general,
    lambda_self_inverse,
    represent,
)
from .special import (
    comtet_thm_f,
    comtet_thm_f_self_inverse,
    lambda_special_identity,
    lambda_special_identity_by_definition,
    lambda_special_unit,
    lambda_special_unit_by_definition,
    round_trip_thm_f,
    special_inverse_hat,
    special_inverse_self_inverse,
)
