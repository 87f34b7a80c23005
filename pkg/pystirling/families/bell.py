"""
Partial Bell polynomials B(n, k), their orthogonal companions A(n, k) (multivariate Stirling polynomials) and the
single-index families built from them.

The default route for both triangles is the differential recurrence, memoized in a `FamilyTable`. The closed
partition sums and the associate Bell route for A are kept as independent oracles.
"""

from fractions import Fraction
from math import factorial, prod

from pystirling.families.combinatorics import binomial
from pystirling.families.partitions import partition_types
from pystirling.families.table import FamilyId, register_table
from pystirling.polyring import X, MultiPoly, partial_derivative, substitute


def _lift(p: MultiPoly) -> MultiPoly:
    """The derivation sum of X_{j+1} * dp/dX_j over all indeterminates X_j with j >= 1."""
    total = MultiPoly.zero()
    for index in sorted(p.variables()):
        if index >= 1:
            total = total + X(index + 1) * partial_derivative(p, index)
    return total


def _bell_recurrence(n: int, k: int) -> MultiPoly:
    if n == 0:
        return MultiPoly.one() if k == 0 else MultiPoly.zero()
    if k == 0 or k > n:
        return MultiPoly.zero()

    # B(n, k) = X_1 B(n-1, k-1) + sum_j X_{j+1} dB(n-1, k)/dX_j
    return X(1) * bell(n - 1, k - 1) + _lift(bell(n - 1, k))


def _stirling_a_recurrence(n: int, k: int) -> MultiPoly:
    if n == 0:
        return MultiPoly.one() if k == 0 else MultiPoly.zero()
    if k == 0 or k > n:
        return MultiPoly.zero()

    # A(n, k) = X_1^-1 (A(n-1, k-1) + sum_j X_{j+1} dA(n-1, k)/dX_j)
    return X(1, -1) * (stirling_a(n - 1, k - 1) + _lift(stirling_a(n - 1, k)))


_BELL = register_table(FamilyId.BELL, _bell_recurrence)
_STIRLING_A = register_table(FamilyId.STIRLING_A, _stirling_a_recurrence)


def bell(n: int, k: int) -> MultiPoly:
    """
    Partial Bell polynomial B(n, k) in X_1, ..., X_{n-k+1}.

    The value is zero outside of 0 <= k <= n, the integer-index extension lives in `pystirling.extended`.
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    return _BELL.get(n, k)


def bell_partition_sum(n: int, k: int) -> MultiPoly:
    """
    B(n, k) as the sum over (n, k)-partition types of n! / prod(r_j! (j!)^r_j) * prod X_j^r_j.
    """
    return MultiPoly.from_terms(
        (dict(partition.items()), partition.set_partition_count()) for partition in partition_types(n, k)
    )


def stirling_a(n: int, k: int) -> MultiPoly:
    """
    Multivariate Stirling polynomial A(n, k), a polynomial in X_1^-1, X_2, ..., X_{n-k+1}. Zero outside of
    0 <= k <= n.
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    return _STIRLING_A.get(n, k)


def stirling_a_partition_sum(n: int, k: int) -> MultiPoly:
    """
    A(n, k) = X_1^-(2n-1) * sum over P(2n-1-k, n-1) of
    (-1)^(n-1-r_1) (2n-2-r_1)! / ((k-1)! prod_{j>=2} r_j! (j!)^r_j) * prod X_j^r_j.
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    if k == 0:
        return MultiPoly.one() if n == 0 else MultiPoly.zero()

    terms = []
    for partition in partition_types(2 * n - 1 - k, n - 1):
        r_1 = partition.r(1)
        denominator = factorial(k - 1) * prod(
            factorial(r) * factorial(j) ** r for j, r in partition.items() if j >= 2
        )
        coeff = Fraction((-1) ** (n - 1 - r_1) * factorial(2 * n - 2 - r_1), denominator)
        terms.append((dict(partition.items()), coeff))

    return MultiPoly.from_terms(terms) * X(1, -(2 * n - 1))


def stirling_a_via_assoc_bell(n: int, k: int) -> MultiPoly:
    """
    A(n, k) = sum_{j=k-1}^{n-1} (-1)^(n-1-j) C(2n-2-j, k-1) X_1^(j-2n+1) assoc_bell(2n-1-k-j, n-1-j),
    for 1 <= k <= n.
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    if k == 0:
        return MultiPoly.one() if n == 0 else MultiPoly.zero()

    total = MultiPoly.zero()
    for j in range(k - 1, n):
        inner = assoc_bell(2 * n - 1 - k - j, n - 1 - j)
        if inner.is_zero:
            continue
        sign = (-1) ** (n - 1 - j)
        total = total + inner * X(1, j - 2 * n + 1) * (sign * binomial(2 * n - 2 - j, k - 1))
    return total


def assoc_bell(n: int, k: int) -> MultiPoly:
    """
    Associate Bell polynomial B(n, k)(0, X_2, X_3, ...). Counts set partitions without singleton blocks.
    """
    return substitute(bell(n, k), {1: 0})


def complete_bell(n: int) -> MultiPoly:
    """Exponential polynomial B_n = sum_k B(n, k)."""
    total = MultiPoly.zero()
    for k in range(n + 1):
        total = total + bell(n, k)
    return total


def logarithmic(n: int) -> MultiPoly:
    """Logarithmic polynomial L_n = sum_{k>=1} (-1)^(k-1) (k-1)! B(n, k)."""
    total = MultiPoly.zero()
    for k in range(1, n + 1):
        total = total + bell(n, k) * ((-1) ** (k - 1) * factorial(k - 1))
    return total


def geometric(n: int) -> MultiPoly:
    """Geometric polynomial sum_k k! B(n, k)."""
    total = MultiPoly.zero()
    for k in range(n + 1):
        total = total + bell(n, k) * factorial(k)
    return total


def bell_codiagonal(n: int, k: int) -> MultiPoly:
    """
    B(n, n-k) for k >= 1 from lower entries, showing that X_2, X_3, ... enter linearly:

        B(n, n-k) = sum_{i=1}^k X_{i+1} sum_{j=0}^{n-k-1} C(n-j-1, i) X_1^j B(n-j-i-1, n-j-k-1)
    """
    if k < 1:
        raise ValueError("bell_codiagonal requires k >= 1")

    total = MultiPoly.zero()
    for i in range(1, k + 1):
        inner = MultiPoly.zero()
        for j in range(n - k):
            lower = bell(n - j - i - 1, n - j - k - 1)
            if lower.is_zero:
                continue
            inner = inner + lower * X(1, j) * binomial(n - j - 1, i)
        total = total + X(i + 1) * inner
    return total


def bell_derivative_check(n: int, k: int) -> bool:
    """
    dB(n, k)/dX_j = C(n, j) B(n-j, k-1) for 1 <= j <= n. Both sides vanish for j > n-k+1.
    """
    polynomial = bell(n, k)
    return all(partial_derivative(polynomial, j) == bell(n - j, k - 1) * binomial(n, j) for j in range(1, n + 1))
