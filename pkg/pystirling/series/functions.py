"""
Named series used throughout the package: identity, expm, logm, geometric and exponentials of series.
"""

from fractions import Fraction
from math import factorial

from pystirling.exceptions import CompositionCaseViolation
from pystirling.series.power_series import PowerSeries, compose_0case


def identity(order: int) -> PowerSeries:
    return PowerSeries([0, 1], order)


def power_of_x(k: int, order: int) -> PowerSeries:
    return PowerSeries([0] * k + [1], order)


def exp_full(order: int) -> PowerSeries:
    return PowerSeries((Fraction(1, factorial(n)) for n in range(order + 1)), order)


def expm(order: int) -> PowerSeries:
    """e^x - 1."""
    return PowerSeries((Fraction(0) if n == 0 else Fraction(1, factorial(n)) for n in range(order + 1)), order)


def logm(order: int) -> PowerSeries:
    """
    Mercator's series log(1 + x) = x - x^2/2 + x^3/3 - ..., the compositional inverse of expm.
    """
    return PowerSeries((Fraction(0) if n == 0 else Fraction((-1) ** (n - 1), n) for n in range(order + 1)), order)


log1p_series = logm


def geometric(order: int) -> PowerSeries:
    """x / (1 - x)."""
    return PowerSeries((0 if n == 0 else 1 for n in range(order + 1)), order)


def exp_series(phi: PowerSeries) -> PowerSeries:
    """
    e^phi for phi in F_0.

    Raises:
        CompositionCaseViolation: If phi(0) != 0.
    """
    if not phi.is_f0:
        raise CompositionCaseViolation("0-case", "exp requires a series without constant term")
    return compose_0case(exp_full(phi.order), phi)


def taylor_power(phi: PowerSeries, k: int) -> PowerSeries:
    """phi^k / k!, the exponential generating function of the k-th column of Bell values of phi."""
    return (phi**k) / factorial(k)
