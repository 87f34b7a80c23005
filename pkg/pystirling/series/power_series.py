"""
Truncated formal power series over the rationals.

Series are stored by their ordinary coefficients c_0..c_N, the Taylor view `taylor(n) = n! * c_n` is computed on
demand. Binary operations truncate to the smaller order of their operands.
"""

from fractions import Fraction
from math import factorial
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from pystirling.exceptions import CompositionCaseViolation, NotAUnit
from pystirling.logger import logger

Scalar = Union[int, Fraction]
SeriesLike = Union["PowerSeries", int, Fraction]


class PowerSeries:
    """
    Formal power series f = c_0 + c_1 x + ... + c_N x^N + O(x^(N+1)).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: Optional[int] = None) -> None:
        values = [Fraction(value) for value in coeffs]

        if order is None:
            order = len(values) - 1
        if order < 0:
            raise ValueError("Truncation order must be nonnegative")

        values = values[: order + 1]
        values.extend(Fraction(0) for _ in range(order + 1 - len(values)))
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def from_taylor(cls, taylor: Sequence[Scalar], order: Optional[int] = None) -> "PowerSeries":
        """
        Builds a series from its Taylor coefficients D^n(f)(0).
        """
        return cls((Fraction(value) / factorial(n) for n, value in enumerate(taylor)), order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([], order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls([value], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"Coefficient {n} exceeds truncation order {self.order}")
        return self._coeffs[n]

    def taylor(self, n: int) -> Fraction:
        return self.coeff(n) * factorial(n)

    def taylor_coefficients(self) -> List[Fraction]:
        return [self.taylor(n) for n in range(self.order + 1)]

    @property
    def is_f0(self) -> bool:
        return self._coeffs[0] == 0

    @property
    def is_f1(self) -> bool:
        return self._coeffs[0] != 0

    @property
    def is_invertible(self) -> bool:
        return self._coeffs[0] == 0 and self.order >= 1 and self._coeffs[1] != 0

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self._coeffs, min(order, self.order))

    def shift_down(self) -> "PowerSeries":
        """f / x for f in F_0, one order lower."""
        if not self.is_f0:
            raise CompositionCaseViolation("division by x", "series has a nonzero constant term")
        return PowerSeries(self._coeffs[1:], self.order - 1)

    def _coerce(self, other: SeriesLike) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other: SeriesLike) -> "PowerSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return PowerSeries((a + b for a, b in zip(self._coeffs, other._coeffs)), order)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-value for value in self._coeffs), self.order)

    def __sub__(self, other: SeriesLike) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: SeriesLike) -> "PowerSeries":
        return (-self) + other

    def __mul__(self, other: SeriesLike) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return PowerSeries((value * other for value in self._coeffs), self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "PowerSeries":
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, power: int) -> "PowerSeries":
        if power < 0:
            return series_reciprocal(self) ** (-power)

        result = PowerSeries.constant(1, self.order)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = " + ".join(f"{value}*x^{n}" for n, value in enumerate(self._coeffs) if value != 0) or "0"
        return f"PowerSeries({terms} + O(x^{self.order + 1}))"


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """
    Cauchy product truncated to the smaller order.
    """
    order = min(f.order, g.order)
    left, right = f.coeffs, g.coeffs
    return PowerSeries(
        (sum((left[i] * right[n - i] for i in range(n + 1)), Fraction(0)) for n in range(order + 1)),
        order,
    )


def series_reciprocal(f: PowerSeries) -> PowerSeries:
    """
    Multiplicative inverse 1/f of a unit series.

    Raises:
        NotAUnit: If the constant term of `f` is zero.
    """
    if not f.is_f1:
        raise NotAUnit("series_reciprocal")

    coeffs = f.coeffs
    inverse: List[Fraction] = [Fraction(1) / coeffs[0]]

    for n in range(1, f.order + 1):
        inverse.append(-sum((coeffs[i] * inverse[n - i] for i in range(1, n + 1)), Fraction(0)) / coeffs[0])

    return PowerSeries(inverse, f.order)


def compose_0case(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """
    f(g(x)) for g in F_0, evaluated by Horner's scheme.

    Raises:
        CompositionCaseViolation: If g(0) != 0.
    """
    if not g.is_f0:
        raise CompositionCaseViolation("0-case", "inner series has a nonzero constant term")

    order = min(f.order, g.order)
    inner = g.truncate(order)
    result = PowerSeries.constant(f.coeff(order), order)

    for n in range(order - 1, -1, -1):
        result = result * inner + f.coeff(n)

    return result


def derive(f: PowerSeries) -> PowerSeries:
    """
    Termwise derivative D(f). The truncation order drops by one (but never below zero).
    """
    if f.order == 0:
        return PowerSeries.zero(0)
    return PowerSeries((n * f.coeff(n) for n in range(1, f.order + 1)), f.order - 1)


def lie_derive(phi: PowerSeries, f: PowerSeries) -> PowerSeries:
    """
    D_phi(f) = D(phi)^(-1) * D(f).

    Raises:
        NotAUnit: If D(phi)(0) = 0.
    """
    phi_prime = derive(phi)
    if not phi_prime.is_f1:
        raise NotAUnit("lie_derive")
    return derive(f) * series_reciprocal(phi_prime)


def iterated_lie_derivative(phi: PowerSeries, f: PowerSeries, n: int) -> PowerSeries:
    result = f
    for _ in range(n):
        result = lie_derive(phi, result)
    logger.debug("Computed %s-fold Lie derivative at order %s", n, result.order)
    return result
