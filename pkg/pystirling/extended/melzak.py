"""
Comtet's expansion of P(n, -k) through P(n, 0), ..., P(n, m) and Melzak's binomial transformation of polynomials,
which shares its coefficients.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Union

from pystirling.exceptions import DomainViolation
from pystirling.families import binomial, potential
from pystirling.polyring import PARAM_T, MultiPoly, evaluate, substitute

Univariate = Union[MultiPoly, Sequence[Union[int, Fraction]]]


def _check_shift(operation: str, m: int, k: int) -> None:
    if -m <= k <= 0:
        raise DomainViolation(operation, f"-k must not lie in 0..{m}, got k={k}")


def melzak_weights(m: int, k: int) -> List[Fraction]:
    """
    w_j = k C(m+k, m) (-1)^j C(m, j) / (k+j) for 0 <= j <= m.

    Raises:
        DomainViolation: If -k lies in 0..m.
    """
    _check_shift("melzak_weights", m, k)
    scale = k * binomial(m + k, m)
    return [Fraction(scale * (-1) ** j * binomial(m, j), k + j) for j in range(m + 1)]


def comtet_thm_c_rhs(n: int, k: int, m: int) -> MultiPoly:
    """k C(m+k, m) sum_{j=0}^m (-1)^j C(m, j) P(n, j) / (k+j)."""
    total = MultiPoly.zero()
    for j, weight in enumerate(melzak_weights(m, k)):
        total = total + potential(n, j) * weight
    return total


def comtet_thm_c(n: int, k: int, m: Optional[int] = None) -> bool:
    """
    P(n, -k) = k C(m+k, m) sum_{j=0}^m (-1)^j C(m, j) P(n, j) / (k+j) for m >= n >= 0. `m` defaults to n.

    Raises:
        DomainViolation: If n < 0, m < n or -k lies in 0..m.
    """
    m = n if m is None else m
    if n < 0 or m < n:
        raise DomainViolation("comtet_thm_c", f"m >= n >= 0 is required, got n={n}, m={m}")
    _check_shift("comtet_thm_c", m, k)
    return potential(n, -k) == comtet_thm_c_rhs(n, k, m)


def as_univariate(p: Univariate) -> MultiPoly:
    """Coefficient lists [a_0, a_1, ...] become a_0 + a_1 t + ... in the parameter t."""
    if isinstance(p, MultiPoly):
        if p.variables() - {PARAM_T}:
            raise DomainViolation("melzak", "the polynomial may only depend on t")
        return p
    return MultiPoly.from_terms(({PARAM_T: j}, coeff) for j, coeff in enumerate(p))


def degree_in_t(p: MultiPoly) -> int:
    """Degree in t, -1 for the zero polynomial."""
    return max((monomial.exponent(PARAM_T) for monomial, _ in p.items()), default=-1)


def _shifted(p: MultiPoly, shift: int) -> MultiPoly:
    return substitute(p, {PARAM_T: MultiPoly.var(PARAM_T) + shift})


def melzak(
    p: Univariate, m: int, k: int, n: Optional[int] = None, samples: Optional[Iterable[Union[int, Fraction]]] = None
) -> bool:
    """
    Melzak's formula p(x+k) = k C(m+k, m) sum_{j=0}^m (-1)^j C(m, j) p(x-j) / (k+j).

    By default both sides are compared as polynomials in t. With `samples` they are only compared at the given
    points.

    Args:
        p(Univariate): A polynomial in the parameter t or its coefficient list.
        m(int): Number of backward shifts, at least the degree bound.
        k(int): Forward shift, -k must not lie in 0..m.
        n(Optional[int]): Degree bound for p, defaults to its degree.
        samples(Optional[Iterable]): Points for the sampled mode.

    Raises:
        DomainViolation: If deg(p) > n, n > m or -k lies in 0..m.

    Returns:
        bool: Whether the formula holds.
    """
    poly = as_univariate(p)
    degree = degree_in_t(poly)
    n = max(degree, 0) if n is None else n
    if degree > n or n > m:
        raise DomainViolation("melzak", f"deg(p) <= n <= m is required, got deg={degree}, n={n}, m={m}")

    weights = melzak_weights(m, k)

    if samples is not None:
        for x in samples:
            left = evaluate(poly, {PARAM_T: x + k})
            right = sum((w * evaluate(poly, {PARAM_T: x - j}) for j, w in enumerate(weights)), Fraction(0))
            if left != right:
                return False
        return True

    right = MultiPoly.zero()
    for j, weight in enumerate(weights):
        right = right + _shifted(poly, -j) * weight
    return _shifted(poly, k) == right
