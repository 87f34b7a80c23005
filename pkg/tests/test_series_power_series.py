# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

from fractions import Fraction

import pytest
from hypothesis import given, settings

from pystirling.exceptions import CompositionCaseViolation, DomainViolation, NotAUnit
from pystirling.series import (
    LaurentPoly1,
    PowerSeries,
    compose_0case,
    compose_1case,
    derive,
    exp_full,
    exp_series,
    expm,
    geometric,
    identity,
    iterated_lie_derivative,
    lie_derive,
    logm,
    random_series,
    series_reciprocal,
    taylor_power,
)
from tests.fixtures.families import rng
from tests.utils.poly_utils import assert_series_equal
from tests.utils.strategies import series


def test_truncation_and_coefficients():
    f = PowerSeries([1, 2, 3, 4], 2)

    assert f.order == 2
    assert f.coeffs == (1, 2, 3)
    assert f.coeff(-1) == 0
    assert PowerSeries([1], 3).coeffs == (1, 0, 0, 0)

    with pytest.raises(IndexError):
        f.coeff(3)

    with pytest.raises(ValueError):
        PowerSeries([], -1)


def test_taylor_coefficients():
    f = PowerSeries.from_taylor([0, 1, 2, 6], 3)

    assert f.coeffs == (0, 1, 1, 1)
    assert f.taylor(3) == 6
    assert expm(4).taylor_coefficients() == [0, 1, 1, 1, 1]


def test_arithmetic_truncates_to_smaller_order():
    f = PowerSeries([1, 1], 5)
    g = PowerSeries([1, -1], 3)

    assert (f * g).order == 3
    assert (f * g).coeffs == (1, 0, -1, 0)
    assert (f + 1).coeffs == (2, 1, 0, 0, 0, 0)
    assert (f / 2).coeff(1) == Fraction(1, 2)


@settings(max_examples=40, deadline=None)
@given(series(order=5, kind="unit"))
def test_reciprocal(f):
    one = PowerSeries.constant(1, 5)

    assert f * series_reciprocal(f) == one
    assert f**-1 == series_reciprocal(f)
    assert f**-2 * f**2 == one


def test_reciprocal_of_non_unit():
    with pytest.raises(NotAUnit):
        series_reciprocal(identity(4))


def test_geometric_and_logm():
    assert geometric(4).coeffs == (0, 1, 1, 1, 1)
    assert logm(4).coeffs == (0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4))
    assert_series_equal(compose_0case(expm(6), logm(6)), identity(6))
    assert_series_equal(compose_0case(logm(6), expm(6)), identity(6))


@settings(max_examples=30, deadline=None)
@given(series(order=4), series(order=4, kind="f0"), series(order=4, kind="f0"))
def test_composition_is_associative(f, g, h):
    assert compose_0case(compose_0case(f, g), h) == compose_0case(f, compose_0case(g, h))


def test_composition_cases():
    with pytest.raises(CompositionCaseViolation):
        compose_0case(expm(3), exp_full(3))

    with pytest.raises(CompositionCaseViolation):
        compose_1case(LaurentPoly1({-1: 1}), identity(3))


def test_laurent_composition():
    g = PowerSeries([1, 1], 4)
    inverse = compose_1case(LaurentPoly1.monomial(-1), g)

    assert inverse.coeffs == (1, -1, 1, -1, 1)
    assert compose_1case(LaurentPoly1({2: 1, -1: 1}), g) == g**2 + inverse


def test_laurent_derivative():
    f = LaurentPoly1({-2: 1, 3: 2})

    assert f.derive() == LaurentPoly1({-3: -2, 2: 6})
    assert f.derive_n(2) == LaurentPoly1({-4: 6, 1: 12})


def test_exp_series_and_powers():
    assert exp_series(identity(4)) == exp_full(4)
    assert taylor_power(identity(4), 2).coeffs == (0, 0, Fraction(1, 2), 0, 0)

    with pytest.raises(CompositionCaseViolation):
        exp_series(exp_full(3))


def test_derivatives():
    assert derive(expm(4)) == exp_full(3)
    assert lie_derive(identity(5), expm(5)) == exp_full(4)
    assert iterated_lie_derivative(expm(6), identity(6), 1).coeffs[:2] == (1, -1)

    with pytest.raises(NotAUnit):
        lie_derive(PowerSeries([0, 0, 1], 4), identity(4))


def test_shift_down():
    assert identity(4).shift_down() == PowerSeries.constant(1, 3)

    with pytest.raises(CompositionCaseViolation):
        exp_full(3).shift_down()


def test_random_series_kinds(rng):
    assert random_series(rng, 5, "f0").is_f0
    assert random_series(rng, 5, "unit").is_f1
    assert random_series(rng, 5, "invertible").is_invertible
    assert random_series(rng, 1, "invertible").is_invertible


@pytest.mark.parametrize("order, kind", [(0, "invertible"), (-1, "any"), (-2, "unit")])
def test_random_series_rejects_short_orders(rng, order, kind):
    with pytest.raises(DomainViolation):
        random_series(rng, order, kind)


def test_random_series_of_order_zero(rng):
    assert random_series(rng, 0, "f0").coeff(0) == 0
    assert random_series(rng, 0, "unit").is_f1
