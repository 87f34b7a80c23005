# pylint: disable=missing-module-docstring

from .indices import (
    MATRIX_RADIUS,
    bell_ext,
    bell_ext_matrix,
    binom_ext,
    combination_reciprocity,
    stirling_a_ext,
    stirling_a_ext_matrix,
)
from .melzak import as_univariate, comtet_thm_c, comtet_thm_c_rhs, degree_in_t, melzak, melzak_weights
from .reciprocity import (
    basic_reciprocity,
    bell_via_assoc,
    family_ext,
    family_ext_orthogonal,
    general_reciprocity,
    gould_check,
    potential_reciprocity,
    power_coefficient,
    reciprocity_check,
    schlaefli_check,
    schloemilch_schlaefli,
    schloemilch_schlaefli_general,
    schur_jabotinsky,
    self_reciprocity,
)
