"""
Compositional inversion of power series by two independent routes.
"""

from fractions import Fraction
from typing import List

from pystirling.exceptions import NotInvertible, RouteMismatch
from pystirling.logger import logger
from pystirling.series.functions import identity
from pystirling.series.power_series import PowerSeries, iterated_lie_derivative


def inverse_by_stirling_polynomials(f: PowerSeries) -> PowerSeries:
    """
    Taylor coefficients of the inverse as A_{n,1}(f_1, ..., f_n).
    """
    # pylint: disable=import-outside-toplevel
    from pystirling.families.bell import stirling_a
    from pystirling.polyring import evaluate

    taylor = f.taylor_coefficients()
    values = {j: taylor[j] for j in range(1, f.order + 1)}
    coefficients: List[Fraction] = [Fraction(0)]

    for n in range(1, f.order + 1):
        coefficients.append(evaluate(stirling_a(n, 1), values))

    return PowerSeries.from_taylor(coefficients, f.order)


def inverse_by_lie_derivatives(f: PowerSeries) -> PowerSeries:
    """
    Taylor coefficients of the inverse as D_f^n(id)(0).
    """
    coefficients: List[Fraction] = [Fraction(0)]
    current = identity(f.order)

    for _ in range(1, f.order + 1):
        current = iterated_lie_derivative(f, current, 1)
        coefficients.append(current.coeff(0))

    return PowerSeries.from_taylor(coefficients, f.order)


def invert_series(f: PowerSeries, check: bool = True) -> PowerSeries:
    """
    Compositional inverse g with f(g(x)) = g(f(x)) = x + O(x^(N+1)).

    Args:
        f(PowerSeries): An invertible series (c_0 = 0, c_1 != 0).
        check(bool): Whether to compute the inverse by both routes and compare them. Defaults to True.

    Raises:
        NotInvertible: If `f` is not invertible.
        RouteMismatch: If the two routes disagree.

    Returns:
        PowerSeries: The inverse of `f` at the order of `f`.
    """
    if not f.is_invertible:
        raise NotInvertible("invert_series")

    by_lie_derivatives = inverse_by_lie_derivatives(f)
    if not check:
        return by_lie_derivatives

    by_polynomials = inverse_by_stirling_polynomials(f)
    if by_polynomials != by_lie_derivatives:
        raise RouteMismatch("invert_series", by_polynomials, by_lie_derivatives)

    logger.debug("Inverted series of order %s, both routes agree", f.order)
    return by_polynomials
