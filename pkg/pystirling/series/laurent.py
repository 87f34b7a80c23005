"""
Univariate Laurent polynomials in x and the 1-case of composition.
"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

from pystirling.exceptions import CompositionCaseViolation
from pystirling.series.power_series import PowerSeries, series_reciprocal

Scalar = Union[int, Fraction]


class LaurentPoly1:
    """
    Finite Laurent polynomial sum of f_k x^k, k in Z.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar]) -> None:
        self._coeffs: Dict[int, Fraction] = {
            exponent: Fraction(value) for exponent, value in coeffs.items() if value != 0
        }

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPoly1":
        return cls({exponent: coeff})

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._coeffs.items()))

    def coeff(self, exponent: int) -> Fraction:
        return self._coeffs.get(exponent, Fraction(0))

    def derive(self) -> "LaurentPoly1":
        return LaurentPoly1({exponent - 1: exponent * value for exponent, value in self._coeffs.items()})

    def derive_n(self, n: int) -> "LaurentPoly1":
        result = self
        for _ in range(n):
            result = result.derive()
        return result

    def __add__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        merged = dict(self._coeffs)
        for exponent, value in other._coeffs.items():
            merged[exponent] = merged.get(exponent, Fraction(0)) + value
        return LaurentPoly1(merged)

    def __mul__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        product: Dict[int, Fraction] = {}
        for left_exponent, left_value in self._coeffs.items():
            for right_exponent, right_value in other._coeffs.items():
                exponent = left_exponent + right_exponent
                product[exponent] = product.get(exponent, Fraction(0)) + left_value * right_value
        return LaurentPoly1(product)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly1({dict(self.items())})"


def compose_1case(f: LaurentPoly1, g: PowerSeries) -> PowerSeries:
    """
    f(g(x)) for a Laurent polynomial f and a unit series g. Negative powers go through the reciprocal of g.

    Raises:
        CompositionCaseViolation: If g(0) = 0.
    """
    if not g.is_f1:
        raise CompositionCaseViolation("1-case", "inner series has a zero constant term")

    result = PowerSeries.zero(g.order)
    inverse = None

    for exponent, value in f.items():
        if exponent >= 0:
            result = result + (g**exponent) * value
        else:
            if inverse is None:
                inverse = series_reciprocal(g)
            result = result + (inverse ** (-exponent)) * value

    return result
