"""
Lagrange inversion polynomials.

The classical polynomial Lambda_n = A(n, 1) turns the Taylor coefficients of an invertible f into those of inv(f).
The generalized polynomials Lambda_n(a, phi | b, psi) convert the constants c_n of a representation

    f = a * (c o phi),    c(x) = sum_n c_n x^n / n!

into the constants d_n of inv(f) = b * (d o psi). A representation is described by a `SeriesForm`. The linear
conversion polynomials Gamma_n(a, phi) (constants -> Taylor coefficients) and Gamma-bar_n(a, phi) (Taylor
coefficients -> constants) come in two cases, depending on whether a is a unit or an invertible series.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence

from pystirling.exceptions import CompositionCaseViolation, DomainViolation, NotInvertible
from pystirling.families import (
    assoc_bell,
    at_series,
    bell,
    bell_at,
    binomial,
    compose_family,
    reciprocal_poly_hat,
    register_cache,
    stirling_a,
    stirling_a_at,
    taylor_values,
)
from pystirling.logger import logger
from pystirling.polyring import X, MultiPoly, Scalar, evaluate
from pystirling.series import PowerSeries, compose_0case, invert_series, series_mul

# entries per cached conversion; keys carry whole series forms
FORM_CACHE_SIZE = 256


def lambda_classical(n: int) -> MultiPoly:
    """
    Lambda_n = sum_{k=0}^{n-1} (-1)^k X_1^-(n+k) B(n-1+k, k)(0, X_2, ..., X_n), over associate Bell polynomials.
    """
    if n < 1:
        raise ValueError("Lagrange inversion polynomials are defined for n >= 1")

    total = MultiPoly.zero()
    for k in range(n):
        total = total + assoc_bell(n - 1 + k, k) * X(1, -(n + k)) * (-1) ** k
    return total


def lambda_classical_via_full_bell(n: int) -> MultiPoly:
    """Lambda_n = sum_{k=0}^{n-1} (-1)^k C(2n-1, n-1-k) X_1^-(n+k) B(n-1+k, k)."""
    if n < 1:
        raise ValueError("Lagrange inversion polynomials are defined for n >= 1")

    total = MultiPoly.zero()
    for k in range(n):
        total = total + bell(n - 1 + k, k) * X(1, -(n + k)) * ((-1) ** k * binomial(2 * n - 1, n - 1 - k))
    return total


def lambda_classical_via_stirling(n: int) -> MultiPoly:
    return stirling_a(n, 1)


def lambda_self_inverse(n: int) -> bool:
    """Lambda_n o Lambda_# = X_n."""
    return compose_family(lambda_classical(n), lambda_classical) == X(n)


class FormCase(str, Enum):
    """
    Available cases of a representation f = a * (c o phi).
    """

    UNIT = "unit"
    INVERTIBLE = "invertible"


@dataclass(frozen=True)
class SeriesForm:
    """
    The pair (a, phi) of a representation f = a * (c o phi) together with its case: a unit a (a(0) != 0) or an
    invertible a (a(0) = 0, a'(0) != 0). phi is always invertible.
    """

    a: PowerSeries
    phi: PowerSeries
    case: FormCase

    def __post_init__(self) -> None:
        if not self.phi.is_invertible:
            raise NotInvertible("SeriesForm")

        match self.case:
            case FormCase.UNIT:
                if not self.a.is_f1:
                    raise CompositionCaseViolation("unit form", "a(0) must be nonzero")
            case FormCase.INVERTIBLE:
                if not self.a.is_invertible:
                    raise CompositionCaseViolation("invertible form", "a(0) must vanish and a'(0) must be nonzero")

    @classmethod
    def of(cls, a: PowerSeries, phi: PowerSeries) -> "SeriesForm":
        """
        Infers the case from `a`.

        Raises:
            CompositionCaseViolation: If `a` is neither a unit nor invertible.
            NotInvertible: If `phi` is not invertible.
        """
        return cls(a, phi, FormCase.UNIT if a.is_f1 else FormCase.INVERTIBLE)

    @property
    def order(self) -> int:
        return min(self.a.order, self.phi.order)

    def require(self, order: int, operation: str) -> None:
        if self.order < order:
            raise DomainViolation(operation, f"form of order {self.order} is too short, {order} is needed")


@register_cache
@lru_cache(maxsize=FORM_CACHE_SIZE)
def gamma(n: int, form: SeriesForm) -> MultiPoly:
    """
    Gamma_n(a, phi) = sum_k (sum_{j=k}^n C(n, j) a_{n-j} B^phi(j, k)(0)) X_k, the Taylor coefficient f_n as a linear
    form in the constants c_k. In the unit case c_0 = 0 and X_0 is dropped.
    """
    form.require(n, "gamma")

    total = MultiPoly.zero()
    start = 1 if form.case is FormCase.UNIT else 0
    for k in range(start, n + 1):
        coefficient = Fraction(0)
        for j in range(k, n + 1):
            coefficient += binomial(n, j) * form.a.taylor(n - j) * bell_at(form.phi, j, k)
        total = total + X(k) * coefficient
    return total


@register_cache
@lru_cache(maxsize=FORM_CACHE_SIZE)
def gamma_bar(n: int, form: SeriesForm) -> MultiPoly:
    """
    The constant c_n as a linear form in the Taylor coefficients of f.

    Unit case, in X_1, ..., X_n:

        sum_k (sum_{j=k}^n C(j, k) R^_{j-k}(a_0, ..., a_{j-k}) A^phi(n, j)(0)) X_k

    Invertible case, in X_1, ..., X_{n+1}:

        sum_k 1/(k+1) (sum_{j=k}^n C(j, k) R^_{j-k}(a_1/1, ..., a_{j-k+1}/(j-k+1)) A^phi(n, j)(0)) X_{k+1}
    """
    total = MultiPoly.zero()

    match form.case:
        case FormCase.UNIT:
            form.require(n, "gamma_bar")
            for k in range(1, n + 1):
                coefficient = Fraction(0)
                for j in range(k, n + 1):
                    reciprocal = at_series(reciprocal_poly_hat(j - k), form.a)
                    coefficient += binomial(j, k) * reciprocal * stirling_a_at(form.phi, n, j)
                total = total + X(k) * coefficient
        case FormCase.INVERTIBLE:
            form.require(n + 1, "gamma_bar")
            # a / x has the Taylor coefficients a_{j+1} / (j+1)
            quotient = form.a.shift_down()
            for k in range(n + 1):
                coefficient = Fraction(0)
                for j in range(k, n + 1):
                    reciprocal = at_series(reciprocal_poly_hat(j - k), quotient)
                    coefficient += binomial(j, k) * reciprocal * stirling_a_at(form.phi, n, j)
                total = total + X(k + 1) * (coefficient / (k + 1))
    return total


def conversion_round_trip(form: SeriesForm, max_n: int) -> bool:
    """
    Gamma_n o Gamma-bar_# = Gamma-bar_n o Gamma_# = X_n for 1 <= n <= max_n. Needs a form of order max_n + 1.
    """
    for n in range(1, max_n + 1):
        forward = compose_family(gamma(n, form), lambda j: gamma_bar(j, form))
        backward = compose_family(gamma_bar(n, form), lambda j: gamma(j, form))
        if forward != X(n) or backward != X(n):
            logger.debug("Conversion round trip fails at n=%s for %s form", n, form.case.value)
            return False
    return True


@register_cache
@lru_cache(maxsize=FORM_CACHE_SIZE)
def _inverse_image(j: int, form: SeriesForm) -> MultiPoly:
    # Taylor coefficient j of inv(f) in the constants of f: A(j, 1) o Gamma_#(a, phi)
    return compose_family(stirling_a(j, 1), lambda i: gamma(i, form))


@register_cache
@lru_cache(maxsize=FORM_CACHE_SIZE)
def lambda_general(n: int, source: SeriesForm, target: SeriesForm) -> MultiPoly:
    """
    Generalized Lagrange inversion polynomial Lambda_n(a, phi | b, psi) = Gamma-bar_n(b, psi) o A(#, 1) o
    Gamma_#(a, phi), with (a, phi) the `source` form of f and (b, psi) the `target` form of inv(f).

    Raises:
        DomainViolation: If one of the forms is truncated below order n + 1.
    """
    return compose_family(gamma_bar(n, target), lambda j: _inverse_image(j, source))


def lagrange_round_trip(source: SeriesForm, target: SeriesForm, max_n: int) -> bool:
    """
    Lambda_n(a, phi | b, psi) o Lambda_#(b, psi | a, phi) = X_n for 1 <= n <= max_n. Needs forms of order
    max_n + 2.
    """
    for n in range(1, max_n + 1):
        composed = compose_family(lambda_general(n, source, target), lambda j: lambda_general(j, target, source))
        if composed != X(n):
            logger.debug(
                "Lagrange round trip fails at n=%s for %s/%s forms", n, source.case.value, target.case.value
            )
            return False
    return True


def represent(form: SeriesForm, constants: Sequence[Scalar]) -> PowerSeries:
    """f = a * (c o phi) for c(x) = sum_n c_n x^n / n!, truncated to the shortest input."""
    order = min(len(constants) - 1, form.order)
    c = PowerSeries.from_taylor(constants[: order + 1], order)
    return series_mul(form.a.truncate(order), compose_0case(c, form.phi.truncate(order)))


def conversion_constants(form: SeriesForm, f: PowerSeries, count: int) -> List[Fraction]:
    """The constants c_0, ..., c_{count-1} of f = a * (c o phi), read off with Gamma-bar."""
    values = taylor_values(f)
    return [evaluate(gamma_bar(n, form), values) for n in range(count)]


def lagrange_conversion_check(
    source: SeriesForm, target: SeriesForm, constants: Sequence[Scalar], max_n: int
) -> bool:
    """
    Builds f = a * (c o phi) from `constants`, inverts it as a series and compares the constants d_n of
    inv(f) = b * (d o psi) with Lambda_n(a, phi | b, psi)(c_0, c_1, ...) for 0 <= n <= max_n. Needs max_n + 2
    constants and forms of order max_n + 1.

    Raises:
        NotInvertible: If the constants do not describe an invertible f.
    """
    f = represent(source, constants)
    if not f.is_invertible:
        raise NotInvertible("lagrange_conversion_check")

    expected = conversion_constants(target, invert_series(f), max_n + 1)
    values = {j: Fraction(value) for j, value in enumerate(constants)}

    for n in range(max_n + 1):
        predicted = evaluate(lambda_general(n, source, target), values)
        if predicted != expected[n]:
            logger.debug("Lagrange conversion fails at n=%s: %s != %s", n, predicted, expected[n])
            return False
    return True
