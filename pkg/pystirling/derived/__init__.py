# pylint: disable=missing-module-docstring

from .brep import (
    BRepFamily,
    bell_equations_witness,
    bell_generator,
    brep_check_recurrence,
    brep_from_generator,
    brep_orthogonal,
    brep_recurrence_witness,
    constant_triangle,
    solve_bell_row,
)
from .comtet import (
    comtet,
    comtet_codiagonal_4,
    comtet_companion,
    comtet_family,
    comtet_special_values_check,
    comtet_via_stirling_a,
)
from .cycle import (
    complete_cycle_indicator,
    cycle_family,
    cycle_generator,
    cycle_indicator,
    cycle_indicator_via_bell,
    exponential_formula_check,
    permutation_count_check,
)
from .forest import (
    forest,
    forest_companion,
    forest_companion_via_trees,
    forest_family,
    forest_via_trees,
    idempotency,
    idempotency_family,
    idempotency_generator,
    idempotency_via_bell,
    stirling_a_scaled,
    stirling_a_scaled_check,
)
from .involution import (
    involution_check,
    involution_poly,
    involution_poly_self_inverse,
    involution_series,
    involution_via_reflection,
)
from .lah import (
    lah_homogeneity_check,
    lah_signed,
    lah_signed_family,
    lah_signed_via_bell,
    lah_substitution_self_orthogonal,
    lah_unsigned,
    lah_unsigned_family,
    lah_unsigned_generator,
)
from .transform import generalized_stirling_inversion, stirling_inversion_round_trip, stirling_transform
