"""
Utility functions for building and comparing polynomials in tests.
"""
from typing import Mapping, Optional, Tuple, Union

from pystirling.polyring import MultiPoly, to_text
from pystirling.series import PowerSeries

Term = Tuple[Mapping[int, int], Union[int, str]]


def poly(*terms: Term) -> MultiPoly:
    """
    Builds a polynomial from `({index: exponent}, coeff)` pairs. Coefficients may be given as strings like `"3/2"`.
    """
    # pylint: disable=import-outside-toplevel
    from fractions import Fraction

    return MultiPoly.from_terms((exponents, Fraction(coeff)) for exponents, coeff in terms)


def assert_poly_equal(actual: MultiPoly, expected: MultiPoly) -> None:
    """
    Assert that two polynomials are equal, showing both in text form otherwise.

    Raises:
        AssertionError: If the polynomials differ.
    """
    assert actual == expected, f"{to_text(actual)} != {to_text(expected)}"


def assert_series_equal(actual: PowerSeries, expected: PowerSeries) -> None:
    """
    Assert that two series agree up to the smaller truncation order.
    """
    order = min(actual.order, expected.order)
    assert actual.truncate(order).coeffs == expected.truncate(order).coeffs, f"{actual} != {expected}"


def assert_document_equal(actual: Optional[str], expected: str) -> None:
    """
    Assert that an emitted document matches the expected one, ignoring whitespace.

    Raises:
        AssertionError: If nothing was emitted or the documents differ.
    """
    if actual is None:
        raise AssertionError("Nothing was emitted.")

    assert "".join(actual.split()) == "".join(expected.split()), actual
