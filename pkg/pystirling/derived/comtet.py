"""
Comtet's polynomials C(n, k), the coefficients of (theta D)^n = sum_k C(n, k)^theta D^k.
"""

from fractions import Fraction

from pystirling.derived.brep import BRepFamily
from pystirling.families import (
    FamilyId,
    bell,
    binomial,
    compose_family,
    reciprocal_poly_hat,
    register_table,
    sign,
    stirling1,
    stirling2,
    stirling_a,
)
from pystirling.polyring import X, MultiPoly, evaluate, partial_derivative, unify


def _comtet_recurrence(n: int, k: int) -> MultiPoly:
    if n == 0:
        return MultiPoly.one() if k == 0 else MultiPoly.zero()
    if k == 0 or k > n:
        return MultiPoly.zero()

    # C(n, k) = X_0 (C(n-1, k-1) + sum_j X_{j+1} dC(n-1, k)/dX_j), X_0 included
    previous = comtet(n - 1, k)
    lifted = MultiPoly.zero()
    for index in sorted(previous.variables()):
        lifted = lifted + X(index + 1) * partial_derivative(previous, index)
    return X(0) * (comtet(n - 1, k - 1) + lifted)


_COMTET = register_table(FamilyId.COMTET, _comtet_recurrence)


def _shifted_reciprocal(j: int) -> MultiPoly:
    return reciprocal_poly_hat(j - 1)


def comtet(n: int, k: int) -> MultiPoly:
    """
    Comtet polynomial C(n, k) in X_0, ..., X_{n-k}, computed by its differential recurrence.
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    return _COMTET.get(n, k)


def comtet_via_stirling_a(n: int, k: int) -> MultiPoly:
    """C(n, k) = A(n, k)(R^_0, ..., R^_{n-k})."""
    return compose_family(stirling_a(n, k), _shifted_reciprocal)


def comtet_companion(n: int, k: int) -> MultiPoly:
    """Orthogonal companion of C, B(n, k)(R^_0, ..., R^_{n-k})."""
    return compose_family(bell(n, k), _shifted_reciprocal)


def comtet_family() -> BRepFamily:
    return BRepFamily(lambda j: comtet(j, 1), FamilyId.COMTET.value)


def comtet_codiagonal_4(n: int) -> MultiPoly:
    """
    C(n, n-4) from its closed coefficients, all multiples of C(n, 5):

        (15n^3 - 150n^2 + 485n - 502)/48 X_0^(n-4) X_1^4 + (15n^2 - 85n + 116)/6 X_0^(n-3) X_1^2 X_2
        + (5n - 13)/3 X_0^(n-2) X_2^2 + (5n - 11)/2 X_0^(n-2) X_1 X_3 + X_0^(n-1) X_4
    """
    if n < 4:
        raise ValueError("C(n, n-4) requires n >= 4")

    scale = binomial(n, 5)
    terms = [
        ({0: n - 4, 1: 4}, Fraction(15 * n**3 - 150 * n**2 + 485 * n - 502, 48)),
        ({0: n - 3, 1: 2, 2: 1}, Fraction(15 * n**2 - 85 * n + 116, 6)),
        ({0: n - 2, 2: 2}, Fraction(5 * n - 13, 3)),
        ({0: n - 2, 1: 1, 3: 1}, Fraction(5 * n - 11, 2)),
        ({0: n - 1, 4: 1}, Fraction(1)),
    ]
    return MultiPoly.from_terms((exponents, coeff * scale) for exponents, coeff in terms)


def comtet_special_values_check(n: int, k: int) -> bool:
    """
    Special values of C(n, k) and its companion:

        C(n, k)(1, ..., 1)        = c(n, k) = (-1)^(n-k) s1(n, k)
        ortho-C(n, k)(1, ..., 1)  = (-1)^(n-k) s2(n, k)
        C(n, k)(1, 1, 0, ..., 0)  = s2(n, k)
    """
    polynomial = comtet(n, k)
    unsigned_cycles = stirling1(n, k) * sign(n - k)

    if unify(polynomial, 1) != unsigned_cycles:
        return False
    if unify(comtet_companion(n, k), 1) != stirling2(n, k) * sign(n - k):
        return False

    values = {index: 1 if index <= 1 else 0 for index in polynomial.variables()}
    return evaluate(polynomial, values) == stirling2(n, k)
