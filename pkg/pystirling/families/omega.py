"""
The operator Omega_n(f | phi): the n-th Taylor coefficient of a function term f, written as a polynomial in the
indeterminates X_j standing for D^j(phi)(0).

Function terms form a small closed grammar: the placeholder phi, fixed series, sums, products, integer powers,
reciprocals, compositions, compositional inverses and derivatives. `omega` evaluates a term by structural
recursion on these nodes, `realize` turns a term into a concrete series once phi is known.
"""

from dataclasses import dataclass
from math import factorial
from typing import Dict, Tuple, Union

from typing_extensions import Literal

from pystirling.exceptions import CompositionCaseViolation, DomainViolation, NotAUnit, NotInvertible, UnsupportedTerm
from pystirling.families.bell import bell, stirling_a
from pystirling.families.combinatorics import binomial
from pystirling.families.composition import compose_family
from pystirling.families.fdb import laurent_in_x0
from pystirling.families.potential import potential_hat, reciprocal_poly_hat, tree_poly_hat
from pystirling.logger import logger
from pystirling.polyring import X, MultiPoly, substitute
from pystirling.series import (
    LaurentPoly1,
    PowerSeries,
    compose_0case,
    compose_1case,
    derive,
    invert_series,
    series_reciprocal,
)

InverseRoute = Literal["stirling", "lagrange"]


@dataclass(frozen=True)
class Placeholder:
    """
    The unspecified function phi. With `vanishes=True` phi is taken from F_0, so Omega_0(phi) = 0 instead of X_0.
    """

    vanishes: bool = False


@dataclass(frozen=True)
class Fixed:
    """A concrete series in which phi does not occur."""

    series: PowerSeries


@dataclass(frozen=True)
class Sum:
    left: "FunctionTerm"
    right: "FunctionTerm"


@dataclass(frozen=True)
class Product:
    left: "FunctionTerm"
    right: "FunctionTerm"


@dataclass(frozen=True)
class Power:
    base: "FunctionTerm"
    exponent: int


@dataclass(frozen=True)
class Reciprocal:
    term: "FunctionTerm"


@dataclass(frozen=True)
class Compose:
    """
    outer(inner). A Laurent polynomial as outer function selects the 1-case, anything else the 0-case.
    """

    outer: Union["FunctionTerm", LaurentPoly1]
    inner: "FunctionTerm"


@dataclass(frozen=True)
class Inverse:
    term: "FunctionTerm"


@dataclass(frozen=True)
class Derivative:
    term: "FunctionTerm"


FunctionTerm = Union[Placeholder, Fixed, Sum, Product, Power, Reciprocal, Compose, Inverse, Derivative]


def _binomial_row(n: int) -> Tuple[int, ...]:
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return tuple(row)


class _OmegaEvaluator:
    """
    Evaluates Omega_m for one term tree, memoizing every (node, m) pair it visits.
    """

    def __init__(self, inverse_route: InverseRoute) -> None:
        self._inverse_route = inverse_route
        self._cache: Dict[Tuple[FunctionTerm, int], MultiPoly] = {}

    def sequence(self, term: FunctionTerm, upto: int, start: int = 0) -> Dict[int, MultiPoly]:
        return {j: self.value(term, j) for j in range(start, upto + 1)}

    def value(self, term: FunctionTerm, n: int) -> MultiPoly:
        key = (term, n)
        if key not in self._cache:
            self._cache[key] = self._evaluate(term, n)
        return self._cache[key]

    def _evaluate(self, term: FunctionTerm, n: int) -> MultiPoly:
        # pylint: disable=too-many-return-statements
        match term:
            case Placeholder(vanishes=vanishes):
                if vanishes and n == 0:
                    return MultiPoly.zero()
                return X(n)
            case Fixed(series=series):
                if n > series.order:
                    raise DomainViolation("omega", f"fixed series of order {series.order} has no coefficient {n}")
                return MultiPoly.constant(series.taylor(n))
            case Sum(left=left, right=right):
                return self.value(left, n) + self.value(right, n)
            case Product(left=left, right=right):
                return self._leibniz(left, right, n)
            case Power(base=base, exponent=exponent):
                return self._power(base, exponent, n)
            case Reciprocal(term=inner):
                return self._reciprocal(inner, n)
            case Compose(outer=LaurentPoly1() as outer, inner=inner):
                return self._compose_1case(outer, inner, n)
            case Compose(outer=outer, inner=inner):
                return self._compose_0case(outer, inner, n)
            case Inverse(term=inner):
                return self._inverse(inner, n)
            case Derivative(term=inner):
                return self.value(inner, n + 1)
            case _:
                raise UnsupportedTerm(term)

    def _leibniz(self, left: FunctionTerm, right: FunctionTerm, n: int) -> MultiPoly:
        total = MultiPoly.zero()
        for k, weight in enumerate(_binomial_row(n)):
            total = total + self.value(left, n - k) * self.value(right, k) * weight
        return total

    def _power(self, base: FunctionTerm, exponent: int, n: int) -> MultiPoly:
        if exponent < 0:
            return self._reciprocal(Power(base, -exponent), n)
        if exponent == 0:
            return MultiPoly.one() if n == 0 else MultiPoly.zero()
        if exponent == 1:
            return self.value(base, n)
        return self._leibniz(base, Power(base, exponent - 1), n)

    def _substitute_sequence(self, p: MultiPoly, term: FunctionTerm) -> MultiPoly:
        variables = p.variables()
        if not variables:
            return p
        return substitute(p, self.sequence(term, max(variables), start=min(variables)))

    def _reciprocal(self, inner: FunctionTerm, n: int) -> MultiPoly:
        leading = self.value(inner, 0)
        if leading.is_zero:
            raise NotAUnit("omega reciprocal")
        return self._substitute_sequence(reciprocal_poly_hat(n), inner)

    def _compose_0case(self, outer: FunctionTerm, inner: FunctionTerm, n: int) -> MultiPoly:
        if not self.value(inner, 0).is_zero:
            raise CompositionCaseViolation("0-case", "inner term does not vanish at 0")

        total = MultiPoly.zero()
        for k in range(n + 1):
            coefficient = self.value(outer, k)
            if coefficient.is_zero:
                continue
            total = total + coefficient * self._substitute_sequence(bell(n, k), inner)
        return total

    def _compose_1case(self, outer: LaurentPoly1, inner: FunctionTerm, n: int) -> MultiPoly:
        leading = self.value(inner, 0)
        if leading.is_zero:
            raise CompositionCaseViolation("1-case", "inner term vanishes at 0")

        total = MultiPoly.zero()
        derivative = outer
        for k in range(n + 1):
            coefficient = substitute(laurent_in_x0(derivative), {0: leading})
            if not coefficient.is_zero:
                total = total + coefficient * self._substitute_sequence(bell(n, k), inner)
            derivative = derivative.derive()
        return total

    def _inverse(self, inner: FunctionTerm, n: int) -> MultiPoly:
        if not self.value(inner, 0).is_zero or self.value(inner, 1).is_zero:
            raise NotInvertible("omega inverse")
        if n == 0:
            return MultiPoly.zero()

        if self._inverse_route == "stirling":
            return self._substitute_sequence(stirling_a(n, 1), inner)

        # Lagrange: T^_n evaluated at Omega_j(id / f) = R^_j(Omega_1(f)/1, ..., Omega_{j+1}(f)/(j+1))
        shifted = {j: self.value(inner, j + 1) / (j + 1) for j in range(n)}
        quotient = {j: substitute(reciprocal_poly_hat(j), shifted) for j in range(n)}
        return substitute(tree_poly_hat(n), quotient)


def omega(n: int, term: FunctionTerm, inverse_route: InverseRoute = "stirling") -> MultiPoly:
    """
    Omega_n(term | phi) as a polynomial in X_0, X_1, ... .

    Args:
        n(int): The order of the Taylor coefficient.
        term(FunctionTerm): The function term, built from `Placeholder` and the other node types.
        inverse_route(InverseRoute): Whether compositional inverses are expanded through A(n, 1) or through the
            tree polynomials. Defaults to "stirling".

    Raises:
        CompositionCaseViolation: If a composition is neither a valid 0-case nor 1-case.
        NotAUnit: If a reciprocal is taken of a term vanishing at 0.
        NotInvertible: If an inverse is taken of a term which is not invertible.
        UnsupportedTerm: If the term contains an unknown node.

    Returns:
        MultiPoly: The polynomial Omega_n(term | phi).
    """
    if n < 0:
        raise DomainViolation("omega", f"order must be nonnegative, got {n}")

    result = _OmegaEvaluator(inverse_route).value(term, n)
    logger.debug("Omega_%s has %s terms", n, len(result))
    return result


def realize(term: FunctionTerm, phi: PowerSeries) -> PowerSeries:
    """
    The concrete series denoted by `term` once the placeholder is instantiated with `phi`.
    """
    # pylint: disable=too-many-return-statements
    match term:
        case Placeholder():
            return phi
        case Fixed(series=series):
            return series
        case Sum(left=left, right=right):
            return realize(left, phi) + realize(right, phi)
        case Product(left=left, right=right):
            return realize(left, phi) * realize(right, phi)
        case Power(base=base, exponent=exponent):
            return realize(base, phi) ** exponent
        case Reciprocal(term=inner):
            return series_reciprocal(realize(inner, phi))
        case Compose(outer=LaurentPoly1() as outer, inner=inner):
            return compose_1case(outer, realize(inner, phi))
        case Compose(outer=outer, inner=inner):
            return compose_0case(realize(outer, phi), realize(inner, phi))
        case Inverse(term=inner):
            return invert_series(realize(inner, phi), check=False)
        case Derivative(term=inner):
            return derive(realize(inner, phi))
        case _:
            raise UnsupportedTerm(term)


def _power_indices(operation: str, n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise DomainViolation(operation, f"needs 1 <= k <= n, got n={n}, k={k}")


def inverse_power_check(f: FunctionTerm, n: int, k: int) -> bool:
    """
    Checks both closed forms of the k-th power of the compositional inverse of f, 1 <= k <= n:

        Omega_n(inv(f)^k) = k! A(n, k)(Omega_1(f), ..., Omega_{n-k+1}(f))
                          = k! C(n-1, k-1) P^(n-k, n) o R^_#(Omega_1(f)/1, Omega_2(f)/2, ...)

    Omega_1(f) has to be a unit, e.g. f = c o phi with phi vanishing at 0.

    Raises:
        DomainViolation: If k is outside 1..n.
        NotInvertible: If f is not invertible.
    """
    _power_indices("inverse_power_check", n, k)

    evaluator = _OmegaEvaluator("stirling")
    left = evaluator.value(Power(Inverse(f), k), n)
    images = evaluator.sequence(f, n, start=1)

    via_stirling = compose_family(stirling_a(n, k), images.__getitem__) * factorial(k)

    divided = {j: images[j + 1] / (j + 1) for j in range(n)}
    reciprocals = {j: substitute(reciprocal_poly_hat(j), divided) for j in range(n - k + 1)}
    via_potential = substitute(potential_hat(n - k, n), reciprocals) * (factorial(k) * binomial(n - 1, k - 1))

    if left != via_stirling or left != via_potential:
        logger.debug("Inverse power closed forms fail at n=%s, k=%s", n, k)
        return False
    return True


def power_of_function_check(f: FunctionTerm, n: int, k: int) -> bool:
    """
    Checks both closed forms of the k-th power of f, 1 <= k <= n:

        Omega_n(f^k) = k! B(n, k)(Omega_1(f), ..., Omega_{n-k+1}(f))
                     = k! C(n, k) P^(n-k, k)(Omega_1(f)/1, Omega_2(f)/2, ...)

    Raises:
        DomainViolation: If k is outside 1..n.
    """
    _power_indices("power_of_function_check", n, k)

    evaluator = _OmegaEvaluator("stirling")
    left = evaluator.value(Power(f, k), n)
    images = evaluator.sequence(f, n, start=1)

    via_bell = compose_family(bell(n, k), images.__getitem__) * factorial(k)

    divided = {j: images[j + 1] / (j + 1) for j in range(n - k + 1)}
    via_potential = substitute(potential_hat(n - k, k), divided) * (factorial(k) * binomial(n, k))

    if left != via_bell or left != via_potential:
        logger.debug("Power closed forms fail at n=%s, k=%s", n, k)
        return False
    return True
