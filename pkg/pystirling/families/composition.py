"""
Composition of polynomial families (P o Q_#) and the composition rules relating FdB polynomials, Bell values and
potential polynomials of composite functions.
"""

from fractions import Fraction
from math import factorial
from typing import Callable, Union

from pystirling.exceptions import CompositionCaseViolation
from pystirling.families.bell import bell, complete_bell, logarithmic, stirling_a
from pystirling.families.combinatorics import binomial
from pystirling.families.fdb import bell_at, fdb_poly, fdb_poly_hat, stirling_a_at
from pystirling.families.numbers import stirling1, stirling2
from pystirling.families.potential import potential, potential_hat, reciprocal_poly_hat
from pystirling.logger import logger
from pystirling.polyring import PARAM_S, PARAM_T, X, MultiPoly, substitute
from pystirling.series import LaurentPoly1, PowerSeries, compose_0case, compose_1case

IndexedFamily = Callable[[int], MultiPoly]


def compose_family(p: MultiPoly, family: IndexedFamily) -> MultiPoly:
    """
    P o Q_#: every indeterminate X_j of `p` is replaced by family(j). The parameters t and s stay fixed.
    """
    indices = [index for index in p.variables() if index not in (PARAM_T, PARAM_S)]
    return substitute(p, {index: family(index) for index in indices})


def first_composition_rule_check(f: Union[PowerSeries, LaurentPoly1], g: PowerSeries, max_n: int) -> bool:
    """
    Checks Phi_n(f o g) = Phi_n(f) o Phi_#(g) for 0 <= n <= max_n. A `LaurentPoly1` as `f` selects the 1-case,
    in which X_0 is sent to g(0).

    Raises:
        CompositionCaseViolation: If the pair is neither a 0-case (g(0) = 0) nor a 1-case (g(0) != 0 and f a
            Laurent polynomial).
    """
    if isinstance(f, LaurentPoly1):
        composite = compose_1case(f, g)
    else:
        composite = compose_0case(f, g)

    for n in range(max_n + 1):
        left = fdb_poly(composite, n)

        if isinstance(f, LaurentPoly1):
            assignment = {j: fdb_poly(g, j) for j in range(1, n + 1)}
            assignment[0] = MultiPoly.constant(g.coeff(0))
            right = substitute(fdb_poly_hat(f, n), assignment)
        else:
            right = compose_family(fdb_poly(f, n), lambda j: fdb_poly(g, j))

        if left != right:
            logger.debug("First composition rule fails at n=%s: %s != %s", n, left, right)
            return False
    return True


def jabotinsky(f: PowerSeries, g: PowerSeries, n: int, k: int) -> bool:
    """
    Second composition rule at (n, k):

        B^(f o g)(n, k)(0) = sum_j B^g(n, j)(0) B^f(j, k)(0)

    and, when f and g are both invertible, the covariant form A^(f o g)(n, k)(0) = sum_j A^f(n, j)(0) A^g(j, k)(0).

    Raises:
        CompositionCaseViolation: If f or g has a nonzero constant term.
    """
    if not (f.is_f0 and g.is_f0):
        raise CompositionCaseViolation("0-case", "both series must vanish at 0")

    composite = compose_0case(f, g)
    left = bell_at(composite, n, k)
    right = sum((bell_at(g, n, j) * bell_at(f, j, k) for j in range(k, n + 1)), Fraction(0))

    if left != right:
        logger.debug("Bell form of the second composition rule fails at (%s, %s)", n, k)
        return False

    if f.is_invertible and g.is_invertible:
        left = stirling_a_at(composite, n, k)
        right = sum((stirling_a_at(f, n, j) * stirling_a_at(g, j, k) for j in range(k, n + 1)), Fraction(0))
        if left != right:
            logger.debug("Stirling form of the second composition rule fails at (%s, %s)", n, k)
            return False

    return True


def potential_product_rule(n: int, r: int, s: int) -> bool:
    """P^(n, rs) = P^(n, r)(P^(0, s), ..., P^(n, s))."""
    return potential_hat(n, r * s) == compose_family(potential_hat(n, r), lambda j: potential_hat(j, s))


def potential_negation_rule(n: int, r: int) -> bool:
    """P^(n, -r) = P^(n, r)(R^_0, ..., R^_n)."""
    return potential_hat(n, -r) == compose_family(potential_hat(n, r), reciprocal_poly_hat)


def reciprocal_involution(n: int) -> bool:
    """R^_n o R^_# = X_n."""
    return compose_family(reciprocal_poly_hat(n), reciprocal_poly_hat) == X(n)


def bell_product_rule(n: int, r: int, s: int) -> bool:
    """
    (rs)! B(n, rs) = r! (s!)^r B(n, r)(B(1, s), ..., B(n-r+1, s)) for n >= 1 and r, s >= 0.
    """
    left = bell(n, r * s) * factorial(r * s)
    right = compose_family(bell(n, r), lambda j: bell(j, s)) * (factorial(r) * factorial(s) ** r)
    return left == right


def _stirling_a_column(j: int) -> MultiPoly:
    return stirling_a(j, 1)


def companion_representation_check(n: int, k: int) -> bool:
    """
    A(n, k) = B(n, k) o A(#, 1) and B(n, k) = A(n, k) o A(#, 1).
    """
    if compose_family(bell(n, k), _stirling_a_column) != stirling_a(n, k):
        logger.debug("A(%s, %s) is not B(%s, %s) o A(#, 1)", n, k, n, k)
        return False
    if compose_family(stirling_a(n, k), _stirling_a_column) != bell(n, k):
        logger.debug("B(%s, %s) is not A(%s, %s) o A(#, 1)", n, k, n, k)
        return False
    return True


def substitution_lemma_check(f: PowerSeries, g: PowerSeries, max_n: int) -> bool:
    """
    Checks for 0 <= k <= n <= max_n, with G_j = Phi_j(g) and F_n = Phi_n(f):

        B(n, k) o G_# = sum_{j=k}^n B^g(j, k)(0) B(n, j)
        F_n o G_#     = sum_{j=0}^n D^j(f o g)(0) B(n, j)

    Raises:
        CompositionCaseViolation: If g(0) != 0.
    """
    if not g.is_f0:
        raise CompositionCaseViolation("0-case", "the substitution lemma needs g(0) = 0")

    images = {j: fdb_poly(g, j) for j in range(1, max_n + 1)}
    composite = compose_0case(f, g)

    for n in range(max_n + 1):
        for k in range(n + 1):
            left = compose_family(bell(n, k), images.__getitem__)
            right = MultiPoly.zero()
            for j in range(k, n + 1):
                right = right + bell(n, j) * bell_at(g, j, k)
            if left != right:
                logger.debug("Substitution lemma fails for B(%s, %s)", n, k)
                return False

        left = compose_family(fdb_poly(f, n), images.__getitem__)
        right = MultiPoly.zero()
        for j in range(n + 1):
            right = right + bell(n, j) * composite.taylor(j)
        if left != right:
            logger.debug("Substitution lemma fails for F_%s", n)
            return False
    return True


def _scaled(p: MultiPoly, factor: int) -> MultiPoly:
    # p(factor X_1, factor X_2, ...)
    return substitute(p, {index: X(index) * factor for index in p.variables()})


def bell_substitutions_check(n: int, k: int) -> bool:
    """
    Bell polynomials evaluated at complete Bell and logarithmic polynomials:

        B(n, k)(B_1, B_2, ...) = sum_{j=k}^n s2(j, k) B(n, j) = (1/k!) sum_j (-1)^(k-j) C(k, j) B_n(j X)
        B(n, k)(L_1, L_2, ...) = sum_{j=k}^n s1(j, k) B(n, j)
    """
    at_complete = compose_family(bell(n, k), complete_bell)
    at_logarithmic = compose_family(bell(n, k), logarithmic)

    via_stirling2 = MultiPoly.zero()
    via_stirling1 = MultiPoly.zero()
    for j in range(k, n + 1):
        via_stirling2 = via_stirling2 + bell(n, j) * stirling2(j, k)
        via_stirling1 = via_stirling1 + bell(n, j) * stirling1(j, k)

    alternating = MultiPoly.zero()
    for j in range(k + 1):
        alternating = alternating + _scaled(complete_bell(n), j) * ((-1) ** (k - j) * binomial(k, j))
    alternating = alternating / factorial(k)

    return at_complete == via_stirling2 == alternating and at_logarithmic == via_stirling1


def product_identity_check(n: int, k: int) -> bool:
    """P(n, k)(B_1, ..., B_n) = B_n(k X_1, ..., k X_n)."""
    return compose_family(potential(n, k), complete_bell) == _scaled(complete_bell(n), k)
