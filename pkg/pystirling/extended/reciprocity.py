"""
Reciprocity laws between B-representable families and their orthogonal companions on the integer index domain,
and the Schloemilch-Schlaefli type expansions of A through B and vice versa.
"""

from fractions import Fraction

from pystirling.derived import BRepFamily
from pystirling.exceptions import DomainViolation, NotRegular
from pystirling.extended.indices import bell_ext, stirling_a_ext
from pystirling.families import (
    assoc_bell,
    bell,
    binomial,
    compose_family,
    divided_shift,
    potential,
    potential_hat,
    reciprocal_poly,
    sign,
    stirling1,
    stirling2,
    stirling_a,
)
from pystirling.logger import logger
from pystirling.polyring import X, MultiPoly, poly_pow, substitute
from pystirling.series import PowerSeries, invert_series


def reciprocity_check(n: int, k: int) -> bool:
    """A(n, k) = (-1)^(n-k) B(-k, -n) on the extended domain."""
    return stirling_a_ext(n, k) == bell_ext(-k, -n) * sign(n - k)


def _require_regular(family: BRepFamily) -> None:
    if not family.is_regular:
        raise NotRegular(family.leading)


def family_ext(family: BRepFamily, n: int, k: int) -> MultiPoly:
    """
    Q(n, k) = B(n, k)(H_1, H_2, ...) with the extended B, for any integers n and k.

    Raises:
        NotRegular: If H_1 is not a unit, since negative rows carry negative powers of it.
    """
    _require_regular(family)
    return compose_family(bell_ext(n, k), family.h)


def family_ext_orthogonal(family: BRepFamily, n: int, k: int) -> MultiPoly:
    """The companion Q-bar(n, k) = A(n, k)(H_1, H_2, ...) with the extended A."""
    _require_regular(family)
    return compose_family(stirling_a_ext(n, k), family.h)


def general_reciprocity(family: BRepFamily, n: int, k: int) -> bool:
    """
    Q-bar(n, k) = (-1)^(n-k) Q(-k, -n) for a regular B-representable family.

    Raises:
        NotRegular: If the family is not regular.
    """
    return family_ext_orthogonal(family, n, k) == family_ext(family, -k, -n) * sign(n - k)


def self_reciprocity(family: BRepFamily, n: int, k: int) -> bool:
    """Q(n, k) = (-1)^(n-k) Q(-k, -n), which holds for families equal to their own companion."""
    return family_ext(family, n, k) == family_ext(family, -k, -n) * sign(n - k)


def bell_via_assoc(n: int, k: int) -> MultiPoly:
    """
    B(n, n-k) = sum_{j=0}^k C(n, k+j) X_1^(n-k-j) B~(k+j, j), with B~ the associate Bell polynomials.
    """
    if not 0 <= k <= n:
        raise DomainViolation("bell_via_assoc", "0 <= k <= n is required")

    total = MultiPoly.zero()
    for j in range(k + 1):
        weight = binomial(n, k + j)
        if weight == 0:
            continue
        total = total + assoc_bell(k + j, j) * X(1, n - k - j) * weight
    return total


def _schlaefli_weight(n: int, k: int, j: int) -> int:
    return (-1) ** k * binomial(k + n, k - j) * binomial(k - n, k + j)


def schloemilch_schlaefli(n: int, k: int) -> MultiPoly:
    """
    A(n, n-k) = (-1)^k sum_{j=0}^k C(k+n, k-j) C(k-n, k+j) X_1^-(n+j) B(k+j, j).
    """
    if not 0 <= k <= n:
        raise DomainViolation("schloemilch_schlaefli", "0 <= k <= n is required")

    total = MultiPoly.zero()
    for j in range(k + 1):
        weight = _schlaefli_weight(n, k, j)
        if weight == 0:
            continue
        total = total + bell(k + j, j) * X(1, -(n + j)) * weight
    return total


def schloemilch_schlaefli_general(family: BRepFamily, n: int, k: int) -> bool:
    """
    Both expansions for a regular B-representable family Q with companion Q-bar, for n >= k >= 0:

        Q-bar(n, n-k) = (-1)^k sum_j C(k+n, k-j) C(k-n, k+j) Q-bar(1, 1)^(n+j) Q(k+j, j)
        Q(n, n-k)     = (-1)^k sum_j C(k+n, k-j) C(k-n, k+j) Q(1, 1)^(n+j) Q-bar(k+j, j)

    Raises:
        NotRegular: If the family is not regular.
        DomainViolation: If k < 0 or k > n.
    """
    if not 0 <= k <= n:
        raise DomainViolation("schloemilch_schlaefli_general", "0 <= k <= n is required")

    companion = family.orthogonal()
    leading = family.leading
    # Q-bar(1, 1) = A(1, 1)(Q(1, 1)) = Q(1, 1)^-1
    companion_leading = poly_pow(leading, -1)

    first = MultiPoly.zero()
    second = MultiPoly.zero()
    for j in range(k + 1):
        weight = _schlaefli_weight(n, k, j)
        if weight == 0:
            continue
        first = first + poly_pow(companion_leading, n + j) * family.entry(k + j, j) * weight
        second = second + poly_pow(leading, n + j) * companion.entry(k + j, j) * weight

    holds_first = companion.entry(n, n - k) == first
    holds_second = family.entry(n, n - k) == second
    if not (holds_first and holds_second):
        logger.debug("Schloemilch-Schlaefli expansion fails for %s at (%s, %s)", family.name, n, k)
    return holds_first and holds_second


def schlaefli_check(n: int, k: int) -> bool:
    """s1(n, n-k) = (-1)^k sum_j C(k+n, k-j) C(k-n, k+j) s2(k+j, j)."""
    expected = sum((_schlaefli_weight(n, k, j) * stirling2(k + j, j) for j in range(k + 1)), Fraction(0))
    return stirling1(n, n - k) == expected


def gould_check(n: int, k: int) -> bool:
    """s2(n, n-k) = (-1)^k sum_j C(k+n, k-j) C(k-n, k+j) s1(k+j, j)."""
    expected = sum((_schlaefli_weight(n, k, j) * stirling1(k + j, j) for j in range(k + 1)), Fraction(0))
    return stirling2(n, n - k) == expected


def basic_reciprocity(n: int, k: int) -> bool:
    """P(n, -k) = P(n, k)(R_1, ..., R_n)."""
    return potential(n, -k) == compose_family(potential(n, k), reciprocal_poly)


def potential_reciprocity(n: int, k: int) -> bool:
    """
    P^(n-k, k)(X_1/1, ..., X_{n-k+1}/(n-k+1)) = (k/n) P^(n-k, -n)(A(1, 1)/1, ..., A(n-k+1, 1)/(n-k+1)).

    Raises:
        DomainViolation: If n = 0 or k > n.
    """
    if n == 0 or k > n:
        raise DomainViolation("potential_reciprocity", "k <= n and n != 0 are required")

    length = n - k
    left = substitute(potential_hat(length, k), divided_shift(X, length))
    right = substitute(potential_hat(length, -n), divided_shift(lambda j: stirling_a(j, 1), length))
    return left == right * Fraction(k, n)


def power_coefficient(phi: PowerSeries, n: int, k: int) -> Fraction:
    """
    [x^n] phi(x)^k for an invertible phi and any integer k, read off as [x^(n-k)] (phi(x)/x)^k.

    Raises:
        DomainViolation: If phi is too short to determine the coefficient.
    """
    if n < k:
        return Fraction(0)
    quotient = phi.shift_down()
    if quotient.order < n - k:
        raise DomainViolation("power_coefficient", f"a series of order {n - k + 1} is needed")
    return (quotient.truncate(n - k) ** k).coeff(n - k)


def schur_jabotinsky(phi: PowerSeries, n: int, k: int) -> bool:
    """
    a(n, k) = (k/n) b(-k, -n) with phi^k = sum_n a(n, k) x^n and inv(phi)^k = sum_n b(n, k) x^n.

    Raises:
        DomainViolation: If n = 0, k > n or phi is too short.
        NotInvertible: If phi has no compositional inverse.
    """
    if n == 0 or k > n:
        raise DomainViolation("schur_jabotinsky", "k <= n and n != 0 are required")

    inverse = invert_series(phi)
    return power_coefficient(phi, n, k) == Fraction(k, n) * power_coefficient(inverse, -k, -n)
