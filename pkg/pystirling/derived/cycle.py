"""
Partial cycle indicators Z(n, k) and the exponential formula.
"""

from math import factorial, prod

from pystirling.derived.brep import BRepFamily
from pystirling.exceptions import CompositionCaseViolation
from pystirling.families import FamilyId, bell, compose_family, partition_types, register_table
from pystirling.logger import logger
from pystirling.polyring import X, MultiPoly, evaluate
from pystirling.series import PowerSeries, exp_series


def _cycle_partition_sum(n: int, k: int) -> MultiPoly:
    # Cauchy's count n! / prod(r_j! j^r_j) of permutations with r_j cycles of length j
    return MultiPoly.from_terms(
        (
            dict(partition.items()),
            factorial(n) // prod(factorial(r) * j**r for j, r in partition.items()),
        )
        for partition in partition_types(n, k)
    )


_CYCLE = register_table(FamilyId.CYCLE_INDICATOR, _cycle_partition_sum)


def cycle_generator(j: int) -> MultiPoly:
    return X(j) * factorial(j - 1)


def cycle_indicator(n: int, k: int) -> MultiPoly:
    """
    Partial cycle indicator Z(n, k), the sum over cycle types of permutations of an n-set with k cycles.
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    return _CYCLE.get(n, k)


def cycle_indicator_via_bell(n: int, k: int) -> MultiPoly:
    """Z(n, k) = B(n, k)(0! X_1, 1! X_2, 2! X_3, ...)."""
    return compose_family(bell(n, k), cycle_generator)


def cycle_family() -> BRepFamily:
    return BRepFamily(cycle_generator, FamilyId.CYCLE_INDICATOR.value)


def complete_cycle_indicator(n: int) -> MultiPoly:
    total = MultiPoly.zero()
    for k in range(n + 1):
        total = total + cycle_indicator(n, k)
    return total


def exponential_formula_check(f: PowerSeries, max_n: int) -> bool:
    """
    Checks D^n(exp o f)(0) = Z_n(t_1, ..., t_n) with t_j = D^j(f)(0) / (j-1)! for n <= max_n.

    Raises:
        CompositionCaseViolation: If f(0) != 0.
    """
    if not f.is_f0:
        raise CompositionCaseViolation("0-case", "the exponential formula needs f(0) = 0")

    exponential = exp_series(f)
    values = {j: f.taylor(j) / factorial(j - 1) for j in range(1, f.order + 1)}

    for n in range(min(max_n, f.order) + 1):
        if exponential.taylor(n) != evaluate(complete_cycle_indicator(n), values):
            logger.debug("Exponential formula fails at n=%s", n)
            return False
    return True


def permutation_count_check(max_n: int) -> bool:
    """
    The exponential formula at t_j = 1: f = -log(1 - x) has D^j(f)(0) = (j-1)!, so exp o f = 1 / (1 - x) and
    Z_n(1, ..., 1) = n! counts all permutations of an n-set.
    """
    f = PowerSeries.from_taylor([0] + [factorial(j - 1) for j in range(1, max_n + 1)], max_n)
    if not exponential_formula_check(f, max_n):
        return False

    return all(
        evaluate(complete_cycle_indicator(n), {j: 1 for j in range(1, n + 1)}) == factorial(n)
        for n in range(max_n + 1)
    )
