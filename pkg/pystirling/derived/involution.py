"""
Involutory series and involution polynomials built from the signed Lah polynomials.
"""

from fractions import Fraction
from typing import List

from pystirling.derived.lah import lah_signed
from pystirling.exceptions import NotInvertible
from pystirling.families import at_series, compose_family, fdb_poly
from pystirling.logger import logger
from pystirling.polyring import X, MultiPoly
from pystirling.series import PowerSeries, compose_0case, identity, invert_series


def involution_series(g: PowerSeries) -> PowerSeries:
    """
    The involution f with D^n(f)(0) = L^g(n, 1)(0) for n >= 1.

    Raises:
        NotInvertible: If g is not invertible.
    """
    if not g.is_invertible:
        raise NotInvertible("involution_series")

    taylor: List[Fraction] = [Fraction(0)] + [at_series(lah_signed(n, 1), g) for n in range(1, g.order + 1)]
    return PowerSeries.from_taylor(taylor, g.order)


def involution_via_reflection(g: PowerSeries) -> PowerSeries:
    """
    The same involution as g(-x) o inv(g).
    """
    if not g.is_invertible:
        raise NotInvertible("involution_via_reflection")

    reflected = PowerSeries(((-1) ** n * value for n, value in enumerate(g.coeffs)), g.order)
    return compose_0case(reflected, invert_series(g, check=False))


def involution_poly(g: PowerSeries, n: int) -> MultiPoly:
    """Involution polynomial J(g, n) = sum_k L^g(k, 1)(0) B(n, k), the FdB polynomial of the involution."""
    return fdb_poly(involution_series(g), n)


def involution_check(g: PowerSeries, max_n: int) -> bool:
    """
    Checks f o f = id up to order max_n for the involution f built from g.
    """
    f = involution_series(g).truncate(max_n)
    holds = compose_0case(f, f) == identity(f.order)
    if not holds:
        logger.debug("Involution built from %r is not self-inverse", g)
    return holds


def involution_poly_self_inverse(g: PowerSeries, max_n: int) -> bool:
    """
    Checks J(g, n) o J(g, #) = X_n for 1 <= n <= min(max_n, g.order).

    Raises:
        NotInvertible: If g is not invertible.
    """
    f = involution_series(g)
    polys = {n: fdb_poly(f, n) for n in range(1, min(max_n, f.order) + 1)}

    for n, poly in polys.items():
        if compose_family(poly, polys.__getitem__) != X(n):
            logger.debug("Involution polynomial J_%s is not self-inverse", n)
            return False
    return True
