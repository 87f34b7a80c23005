"""
Unsigned and signed Lah polynomials.
"""

from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

from pystirling.derived.brep import BRepFamily
from pystirling.exceptions import NotInvertible
from pystirling.families import FamilyId, bell, compose_family, fdb_poly, kronecker, register_table, stirling_a
from pystirling.logger import logger
from pystirling.polyring import X, MultiPoly, Scalar, substitute
from pystirling.series import PowerSeries


def lah_unsigned_generator(j: int) -> MultiPoly:
    return X(j) * factorial(j)


def _lah_unsigned(n: int, k: int) -> MultiPoly:
    return compose_family(bell(n, k), lah_unsigned_generator)


def _lah_signed(n: int, k: int) -> MultiPoly:
    total = MultiPoly.zero()
    for j in range(k, n + 1):
        total = total + stirling_a(n, j) * bell(j, k) * (-1) ** j
    return total


_LAH_UNSIGNED = register_table(FamilyId.LAH_UNSIGNED, _lah_unsigned)
_LAH_SIGNED = register_table(FamilyId.LAH_SIGNED, _lah_signed)


def lah_unsigned(n: int, k: int) -> MultiPoly:
    """
    Unsigned Lah polynomial B(n, k)(1! X_1, 2! X_2, 3! X_3, ...). Unifies to (n!/k!) C(n-1, k-1).
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    return _LAH_UNSIGNED.get(n, k)


def lah_signed(n: int, k: int) -> MultiPoly:
    """
    Signed Lah polynomial L(n, k) = sum_j (-1)^j A(n, j) B(j, k). The signed family is its own orthogonal
    companion and is homogeneous of degree k - n.
    """
    if n < 0 or k < 0 or k > n:
        return MultiPoly.zero()
    return _LAH_SIGNED.get(n, k)


def lah_unsigned_family() -> BRepFamily:
    return BRepFamily(lah_unsigned_generator, FamilyId.LAH_UNSIGNED.value)


def lah_signed_family() -> BRepFamily:
    return BRepFamily(_lah_signed_column, FamilyId.LAH_SIGNED.value)


def _lah_signed_column(j: int) -> MultiPoly:
    return lah_signed(j, 1)


def lah_signed_via_bell(n: int, k: int) -> MultiPoly:
    """L(n, k) = B(n, k)(L(1, 1), L(2, 1), ..., L(n-k+1, 1))."""
    return compose_family(bell(n, k), _lah_signed_column)


def lah_homogeneity_check(n: int, k: int, t: Scalar) -> bool:
    """L(n, k)(t X_1, t X_2, ...) = t^-(n-k) L(n, k) for a nonzero rational t."""
    polynomial = lah_signed(n, k)
    scaled = substitute(polynomial, {index: X(index) * t for index in polynomial.variables()})
    return scaled == polynomial * Fraction(t) ** (k - n)


def lah_substitution_self_orthogonal(h: PowerSeries, max_n: int) -> bool:
    """
    Checks that Q(n, k) = L(n, k)(H_1, H_2, ...) with H_j = Phi_j(h) is its own orthogonal companion,
    sum_j Q(n, j) Q(j, k) = delta(n, k) for 0 <= k <= n <= max_n.

    Raises:
        NotInvertible: If h is not invertible.
    """
    if not h.is_invertible:
        raise NotInvertible("lah_substitution_self_orthogonal")

    images = {j: fdb_poly(h, j) for j in range(1, max_n + 1)}
    entries: Dict[Tuple[int, int], MultiPoly] = {}
    for n in range(max_n + 1):
        for k in range(n + 1):
            entries[(n, k)] = compose_family(lah_signed(n, k), images.__getitem__)

    for n in range(max_n + 1):
        for k in range(n + 1):
            total = MultiPoly.zero()
            for j in range(k, n + 1):
                total = total + entries[(n, j)] * entries[(j, k)]
            if total != MultiPoly.constant(kronecker(n, k)):
                logger.debug("L o Phi_#(h) is not self-orthogonal at (%s, %s)", n, k)
                return False
    return True
