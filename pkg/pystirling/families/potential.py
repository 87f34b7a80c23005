"""
Potential, reciprocal, tree and factorial polynomials, i.e. the FdB polynomials of the power functions x^k in
the 1-case, together with the routes expressing B and A through them.
"""

from fractions import Fraction
from math import factorial
from typing import Callable, Dict

from pystirling.families.bell import bell
from pystirling.families.combinatorics import binomial, falling
from pystirling.families.numbers import stirling1
from pystirling.families.table import FamilyId, register_table
from pystirling.polyring import X, MultiPoly, evaluate, substitute


def _potential_hat(n: int, k: int) -> MultiPoly:
    total = MultiPoly.zero()
    for j in range(n + 1):
        weight = falling(k, j)
        if weight == 0:
            continue
        total = total + bell(n, j) * X(0, k - j) * weight
    return total


_POTENTIAL_HAT = register_table(FamilyId.POTENTIAL_HAT, _potential_hat)


def potential_hat(n: int, k: int) -> MultiPoly:
    """
    Potential polynomial P^(n, k) = sum_j (k)_j X_0^(k-j) B(n, j) for any integer k. Zero for n < 0.
    """
    if n < 0:
        return MultiPoly.zero()
    return _POTENTIAL_HAT.get(n, k)


def potential(n: int, k: int) -> MultiPoly:
    """P(n, k) = P^(n, k) at X_0 = 1."""
    return substitute(potential_hat(n, k), {0: 1})


def reciprocal_poly_hat(n: int) -> MultiPoly:
    """
    Reciprocal polynomial R^_n = sum_k (-1)^k k! X_0^-(k+1) B(n, k), the n-th Taylor coefficient of 1/f in
    terms of those of f.
    """
    total = MultiPoly.zero()
    for k in range(n + 1):
        total = total + bell(n, k) * X(0, -(k + 1)) * ((-1) ** k * factorial(k))
    return total


def reciprocal_poly(n: int) -> MultiPoly:
    return substitute(reciprocal_poly_hat(n), {0: 1})


def tree_poly_hat(n: int) -> MultiPoly:
    """
    Tree polynomial T^_n = sum_{k=0}^{n-1} (n)_k X_0^(n-k) B(n-1, k), defined for n >= 1.
    """
    if n < 1:
        raise ValueError("Tree polynomials are defined for n >= 1")

    total = MultiPoly.zero()
    for k in range(n):
        total = total + bell(n - 1, k) * X(0, n - k) * falling(n, k)
    return total


def tree_poly(n: int) -> MultiPoly:
    return substitute(tree_poly_hat(n), {0: 1})


def factorial_hat(n: int, k: int) -> MultiPoly:
    """
    Factorial polynomial F^(n, k) = sum_j s1(k, j) P^(n, j) for k >= 0.
    """
    if k < 0:
        raise ValueError("Factorial polynomials are defined for k >= 0")

    total = MultiPoly.zero()
    for j in range(k + 1):
        total = total + potential_hat(n, j) * stirling1(k, j)
    return total


def factorial_poly(n: int, k: int) -> MultiPoly:
    return substitute(factorial_hat(n, k), {0: 1})


def divided_shift(images: Callable[[int], MultiPoly], upto: int) -> Dict[int, MultiPoly]:
    """
    Assignment X_j -> images(j+1) / (j+1) for 0 <= j <= upto.
    """
    return {j: images(j + 1) / (j + 1) for j in range(upto + 1)}


def bell_via_potential(n: int, k: int) -> MultiPoly:
    """
    B(n, k) = C(n, k) P^(n-k, k)(X_1/1, X_2/2, ..., X_{n-k+1}/(n-k+1)).
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    return substitute(potential_hat(n - k, k), divided_shift(X, n - k)) * binomial(n, k)


def _reciprocal_image(j: int) -> MultiPoly:
    # R^_j(X_1/1, X_2/2, ..., X_{j+1}/(j+1))
    return substitute(reciprocal_poly_hat(j), divided_shift(X, j))


def stirling_a_via_potential(n: int, k: int) -> MultiPoly:
    """
    A(n, k) = C(n-1, k-1) P^(n-k, n) evaluated at X_j -> R^_j(X_1/1, ..., X_{j+1}/(j+1)).
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    if k == 0:
        return MultiPoly.one() if n == 0 else MultiPoly.zero()

    assignment = {j: _reciprocal_image(j) for j in range(n - k + 1)}
    return substitute(potential_hat(n - k, n), assignment) * binomial(n - 1, k - 1)


def rho(s: int) -> Fraction:
    """R^_s(1, 1/2, ..., 1/(s+1)). Vanishes for odd s >= 3."""
    return evaluate(reciprocal_poly_hat(s), {j: Fraction(1, j + 1) for j in range(s + 1)})


def stirling1_via_potential(n: int, k: int) -> Fraction:
    """
    s1(n, k) = C(n-1, k-1) P(n-k, n)(rho_1, ..., rho_{n-k}) for 0 <= k <= n.
    """
    if k == 0:
        return Fraction(1 if n == 0 else 0)

    values = {j: rho(j) for j in range(1, n - k + 1)}
    return evaluate(potential(n - k, n), values) * binomial(n - 1, k - 1)


def bell_via_bertrand(n: int, k: int) -> MultiPoly:
    """
    B(n, k) = (1/k!) sum_{j=0}^k (-1)^(k-j) C(k, j) P(n, j), the binomial inverse of P(n, k) = sum_j (k)_j B(n, j).
    """
    if k < 0:
        return MultiPoly.zero()

    total = MultiPoly.zero()
    for j in range(k + 1):
        total = total + potential(n, j) * ((-1) ** (k - j) * binomial(k, j))
    return total / factorial(k)


def logarithmic_via_potential(n: int) -> MultiPoly:
    """
    L_n = sum_{j=1}^n (-1)^(j-1) (1/j) C(n, j) P(n, j) for n >= 1.
    """
    if n < 1:
        raise ValueError("logarithmic_via_potential requires n >= 1")

    total = MultiPoly.zero()
    for j in range(1, n + 1):
        total = total + potential(n, j) * Fraction((-1) ** (j - 1) * binomial(n, j), j)
    return total


def convolution_check(n: int, r: int, s: int) -> bool:
    """
    Convolution identities for n >= 0:

        P^(n, r+s) = sum_k C(n, k) P^(n-k, r) P^(k, s)                 for all integers r, s
        C(r+s, r) B(n, r+s) = sum_k C(n, k) B(n-k, r) B(k, s)          for r, s >= 0
    """
    potential_sum = MultiPoly.zero()
    for k in range(n + 1):
        potential_sum = potential_sum + potential_hat(n - k, r) * potential_hat(k, s) * binomial(n, k)
    if potential_sum != potential_hat(n, r + s):
        return False

    if r < 0 or s < 0:
        return True

    bell_sum = MultiPoly.zero()
    for k in range(n + 1):
        bell_sum = bell_sum + bell(n - k, r) * bell(k, s) * binomial(n, k)
    return bell_sum == bell(n, r + s) * binomial(r + s, r)
