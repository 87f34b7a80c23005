"""
Partial Bell polynomials B(n, k) and their orthogonal companions A(n, k) for arbitrary integer indices.

Both triangles are redefined through the potential polynomials,

    B(n, k) = C(n, n-k) P^(n-k, k)(X_1/1, X_2/2, ..., X_{n-k+1}/(n-k+1))
    A(n, k) = C(n-1, k-1) P^(n-k, n)(R^_0(X_1/1), ..., R^_{n-k}(X_1/1, ..., X_{n-k+1}/(n-k+1)))

with the extended binomial coefficients of `binom_ext`. On 0 <= k <= n both agree with the classical families, the
new values live on k <= n <= -1 and everything else vanishes.
"""

from typing import List

from pystirling.families import (
    FamilyId,
    binomial,
    divided_shift,
    potential_hat,
    reciprocal_poly_hat,
    register_table,
)
from pystirling.polyring import X, MultiPoly, substitute

# Window of the reference matrix of extended Bell polynomials.
MATRIX_RADIUS = 4


def binom_ext(n: int, k: int) -> int:
    """
    Binomial coefficient for any integers. For k >= 0 this is (n)_k / k!, for k < 0 it is zero unless n <= k,
    in which case C(n, k) = C(n, n-k).
    """
    if k >= 0:
        return binomial(n, k)
    if n >= 0 or k > n:
        return 0
    return binomial(n, n - k)


def combination_reciprocity(n: int, k: int) -> bool:
    """C(n+k-1, k) = (-1)^k C(-n, k) for k >= 0."""
    return binom_ext(n + k - 1, k) == (-1) ** k * binom_ext(-n, k)


def _reciprocal_image(j: int) -> MultiPoly:
    return substitute(reciprocal_poly_hat(j), divided_shift(X, j))


def _bell_ext(n: int, k: int) -> MultiPoly:
    if n - k < 0:
        return MultiPoly.zero()

    weight = binom_ext(n, n - k)
    if weight == 0:
        return MultiPoly.zero()
    return substitute(potential_hat(n - k, k), divided_shift(X, n - k)) * weight


def _stirling_a_ext(n: int, k: int) -> MultiPoly:
    if n - k < 0:
        return MultiPoly.zero()

    weight = binom_ext(n - 1, k - 1)
    if weight == 0:
        return MultiPoly.zero()

    assignment = {j: _reciprocal_image(j) for j in range(n - k + 1)}
    return substitute(potential_hat(n - k, n), assignment) * weight


_BELL_EXT = register_table(FamilyId.BELL_EXT, _bell_ext)
_STIRLING_A_EXT = register_table(FamilyId.STIRLING_A_EXT, _stirling_a_ext)


def bell_ext(n: int, k: int) -> MultiPoly:
    """
    Extended partial Bell polynomial, nonzero exactly for n = k = 0, 1 <= k <= n and k <= n <= -1.

    Args:
        n(int): Row index, any integer.
        k(int): Column index, any integer.

    Returns:
        MultiPoly: A Laurent polynomial in X_1 with polynomial dependence on X_2, X_3, ... .
    """
    return _BELL_EXT.get(n, k)


def stirling_a_ext(n: int, k: int) -> MultiPoly:
    """
    Extended orthogonal companion A(n, k), with the same support as `bell_ext`.
    """
    return _STIRLING_A_EXT.get(n, k)


def bell_ext_matrix(radius: int = MATRIX_RADIUS) -> List[List[MultiPoly]]:
    """Rows n = -radius..radius of B(n, k), k = -radius..radius."""
    indices = range(-radius, radius + 1)
    return [[bell_ext(n, k) for k in indices] for n in indices]


def stirling_a_ext_matrix(radius: int = MATRIX_RADIUS) -> List[List[MultiPoly]]:
    indices = range(-radius, radius + 1)
    return [[stirling_a_ext(n, k) for k in indices] for n in indices]
