# pylint: disable=missing-module-docstring

from .bell import (
    assoc_bell,
    bell,
    bell_codiagonal,
    bell_derivative_check,
    bell_partition_sum,
    complete_bell,
    geometric,
    logarithmic,
    stirling_a,
    stirling_a_partition_sum,
    stirling_a_via_assoc_bell,
)
from .combinatorics import binomial, falling, kronecker, rising, sign
from .composition import (
    bell_product_rule,
    bell_substitutions_check,
    companion_representation_check,
    compose_family,
    first_composition_rule_check,
    jabotinsky,
    potential_negation_rule,
    potential_product_rule,
    product_identity_check,
    reciprocal_involution,
    substitution_lemma_check,
)
from .fdb import at_series, bell_at, fdb_poly, fdb_poly_hat, laurent_in_x0, stirling_a_at, taylor_values
from .numbers import stirling1, stirling2, stirling_triangle
from .omega import (
    Compose,
    Derivative,
    Fixed,
    FunctionTerm,
    Inverse,
    Placeholder,
    Power,
    Product,
    Reciprocal,
    Sum,
    inverse_power_check,
    omega,
    power_of_function_check,
    realize,
)
from .partitions import PartitionType, partition_types
from .potential import (
    bell_via_bertrand,
    bell_via_potential,
    convolution_check,
    divided_shift,
    factorial_hat,
    factorial_poly,
    logarithmic_via_potential,
    potential,
    potential_hat,
    reciprocal_poly,
    reciprocal_poly_hat,
    rho,
    stirling1_via_potential,
    stirling_a_via_potential,
    tree_poly,
    tree_poly_hat,
)
from .table import FamilyId, FamilyTable, clear_caches, register_cache, register_table
