"""
Closed forms of the generalized Lagrange inversion polynomials for a = b = 1 and a = b = id, and the modified
inversion problem for series of the shape f(x) = sum_n c_n x^(sn+1) / n!.
"""

from fractions import Fraction
from math import factorial
from typing import Dict, Sequence

from pystirling.exceptions import DomainViolation
from pystirling.families import bell, bell_at, binomial, compose_family, falling, stirling_a, stirling_a_at
from pystirling.inversion.lagrange import SeriesForm, lambda_general
from pystirling.polyring import X, MultiPoly, Scalar, evaluate
from pystirling.series import PowerSeries, compose_0case, identity, invert_series


def special_inverse_hat(n: int, k: int) -> MultiPoly:
    """
    I^(n, k) = sum_{j=0}^n (-1)^j (k+j)_{j-1} X_0^-(k+1+j) B(n, j), with (x)_{-1} = 1/(x+1).
    """
    total = MultiPoly.zero()
    for j in range(n + 1):
        total = total + bell(n, j) * X(0, -(k + 1 + j)) * ((-1) ** j * falling(k + j, j - 1))
    return total


def lambda_special_unit(n: int, phi: PowerSeries, psi: PowerSeries) -> MultiPoly:
    """
    Lambda_n(1, phi | 1, psi) = sum_{k=1}^n A^psi(n, k)(0) sum_{j=1}^k A^phi(j, 1)(0) A(k, j).
    """
    total = MultiPoly.zero()
    for k in range(1, n + 1):
        outer = stirling_a_at(psi, n, k)
        if outer == 0:
            continue

        inner = MultiPoly.zero()
        for j in range(1, k + 1):
            inner = inner + stirling_a(k, j) * stirling_a_at(phi, j, 1)
        total = total + inner * outer
    return total


def lambda_special_identity(n: int, phi: PowerSeries, psi: PowerSeries) -> MultiPoly:
    """
    Lambda_n(id, phi | id, psi) = sum_{k=0}^n A^psi(n, k)(0) sum_{j=0}^k B^phi(k, j)(0) I^(j, k).
    """
    total = MultiPoly.zero()
    for k in range(n + 1):
        outer = stirling_a_at(psi, n, k)
        if outer == 0:
            continue

        inner = MultiPoly.zero()
        for j in range(k + 1):
            weight = bell_at(phi, k, j)
            if weight != 0:
                inner = inner + special_inverse_hat(j, k) * weight
        total = total + inner * outer
    return total


def lambda_special_unit_by_definition(n: int, phi: PowerSeries, psi: PowerSeries) -> MultiPoly:
    one = PowerSeries.constant(1, min(phi.order, psi.order))
    return lambda_general(n, SeriesForm.of(one, phi), SeriesForm.of(one, psi))


def lambda_special_identity_by_definition(n: int, phi: PowerSeries, psi: PowerSeries) -> MultiPoly:
    order = min(phi.order, psi.order)
    return lambda_general(n, SeriesForm.of(identity(order), phi), SeriesForm.of(identity(order), psi))


def comtet_thm_f(n: int, s: int) -> MultiPoly:
    """
    Lambda_n = sum_{k=1}^n (-1)^k C(sn+k, k-1) (k-1)! B(n, k), converting the constants c_1, ..., c_n of
    f(x) = sum_n c_n x^(sn+1) / n! (c_0 = 1) into those of inv(f), which has the same shape.
    """
    if s < 1:
        raise ValueError("The step s must be positive")
    if n == 0:
        return MultiPoly.one()

    total = MultiPoly.zero()
    for k in range(1, n + 1):
        total = total + bell(n, k) * ((-1) ** k * binomial(s * n + k, k - 1) * factorial(k - 1))
    return total


def comtet_thm_f_self_inverse(n: int, s: int) -> bool:
    return compose_family(comtet_thm_f(n, s), lambda j: comtet_thm_f(j, s)) == X(n)


def special_inverse_self_inverse(n: int, s: int) -> bool:
    """I^(n, sn) o I^(#, s#) = X_n, X_0 included."""
    return compose_family(special_inverse_hat(n, s * n), lambda j: special_inverse_hat(j, s * j)) == X(n)


def _spaced_series(constants: Dict[int, Fraction], s: int, order: int) -> PowerSeries:
    coeffs = [Fraction(0)] * (order + 1)
    for r in range((order - 1) // s + 1):
        coeffs[s * r + 1] = constants[r] / factorial(r)
    return PowerSeries(coeffs, order)


def round_trip_thm_f(constants: Sequence[Scalar], s: int, order: int) -> bool:
    """
    Inverts f(x) = sum_r c_r x^(sr+1) / r! as a series of the given order and checks that the inverse is
    sum_r d_r x^(sr+1) / r! with d_r = Lambda_r(c_1, ..., c_r), and that f o inv(f) = id. Missing constants are
    taken as zero.

    Raises:
        DomainViolation: If c_0 != 1.
    """
    if not constants or constants[0] != 1:
        raise DomainViolation("round_trip_thm_f", "the leading constant c_0 must be 1")

    count = (order - 1) // s + 1
    values = {r: Fraction(constants[r]) if r < len(constants) else Fraction(0) for r in range(count)}

    f = _spaced_series(values, s, order)
    inverse = invert_series(f)

    predicted = {r: evaluate(comtet_thm_f(r, s), values) for r in range(count)}
    return inverse == _spaced_series(predicted, s, order) and compose_0case(f, inverse) == identity(order)
