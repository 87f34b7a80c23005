"""
Faa di Bruno polynomials and the evaluation of polynomials at the Taylor coefficients of a series.
"""

from fractions import Fraction
from typing import Dict

from pystirling.exceptions import DomainViolation
from pystirling.families.bell import bell, stirling_a
from pystirling.polyring import MultiPoly, evaluate
from pystirling.series import LaurentPoly1, PowerSeries


def taylor_values(f: PowerSeries, start: int = 0) -> Dict[int, Fraction]:
    """Mapping j -> D^j(f)(0) for start <= j <= order."""
    return {j: f.taylor(j) for j in range(start, f.order + 1)}


def at_series(p: MultiPoly, f: PowerSeries) -> Fraction:
    """
    P^f(0): every X_j of `p` is replaced by D^j(f)(0).

    Raises:
        DomainViolation: If `p` contains an indeterminate beyond the truncation order of `f`.
        ZeroDenominator: If a negative power meets a vanishing Taylor coefficient.
    """
    return evaluate(p, taylor_values(f))


def bell_at(f: PowerSeries, n: int, k: int) -> Fraction:
    """B^f(n, k)(0), the k-th column coefficient of f^k / k!."""
    return at_series(bell(n, k), f)


def stirling_a_at(f: PowerSeries, n: int, k: int) -> Fraction:
    """A^f(n, k)(0) for an invertible series f."""
    return at_series(stirling_a(n, k), f)


def laurent_in_x0(f: LaurentPoly1) -> MultiPoly:
    """The univariate Laurent polynomial f(X_0)."""
    return MultiPoly.from_terms(({0: exponent}, value) for exponent, value in f.items())


def fdb_poly(f: PowerSeries, n: int) -> MultiPoly:
    """
    n-th FdB polynomial of f in the 0-case, sum_k D^k(f)(0) B(n, k).

    Raises:
        DomainViolation: If `f` is truncated below order n.
    """
    if f.order < n:
        raise DomainViolation("fdb_poly", f"series of order {f.order} has no Taylor coefficient {n}")

    total = MultiPoly.zero()
    for k in range(n + 1):
        coefficient = f.taylor(k)
        if coefficient != 0:
            total = total + bell(n, k) * coefficient
    return total


def fdb_poly_hat(f: LaurentPoly1, n: int) -> MultiPoly:
    """
    n-th FdB polynomial of a Laurent polynomial f in the 1-case, sum_k D^k(f)(X_0) B(n, k).
    """
    total = MultiPoly.zero()
    derivative = f
    for k in range(n + 1):
        total = total + laurent_in_x0(derivative) * bell(n, k)
        derivative = derivative.derive()
    return total
