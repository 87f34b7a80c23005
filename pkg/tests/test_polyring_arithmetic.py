# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

from fractions import Fraction

import pytest
from hypothesis import given, settings

from pystirling.exceptions import (
    DomainViolation,
    InvalidLaurentExponent,
    NegativePowerOfNonUnit,
    NonInvertibleSubstitution,
    ZeroDenominator,
)
from pystirling.polyring import (
    PARAM_T,
    X,
    Monomial,
    MultiPoly,
    evaluate,
    grading,
    partial_derivative,
    poly_pow,
    substitute,
    unify,
)
from tests.utils.poly_utils import assert_poly_equal, poly
from tests.utils.strategies import plain_polys, polys


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MultiPoly.zero()
    assert p * MultiPoly.one() == p


@settings(max_examples=60, deadline=None)
@given(polys)
def test_zero_terms_are_never_stored(p):
    assert all(coeff != 0 for _, coeff in p.items())
    assert (p * 0).is_zero


def test_constructors():
    assert X(2) == poly(({2: 1}, 1))
    assert X(1, -2, 3) == poly(({1: -2}, 3))
    assert MultiPoly.constant(0).is_zero
    assert MultiPoly.constant(5) == 5
    assert MultiPoly.from_terms([({1: 1}, 2), ({1: 1}, -2)]).is_zero


def test_laurent_exponents_only_for_x0_and_x1():
    assert X(0, -3).is_unit
    assert (X(1, -1) * 4).is_unit

    with pytest.raises(InvalidLaurentExponent):
        X(2, -1)

    with pytest.raises(InvalidLaurentExponent):
        Monomial({3: -2})


def test_negative_powers():
    assert_poly_equal(poly_pow(X(1) * 2, -2), poly(({1: -2}, "1/4")))
    assert_poly_equal(poly_pow(X(1, -1), -3), X(1, 3))
    assert poly_pow(X(1) + X(2), 0) == MultiPoly.one()

    with pytest.raises(NegativePowerOfNonUnit):
        poly_pow(X(1) + 1, -1)

    with pytest.raises(InvalidLaurentExponent):
        poly_pow(X(2), -1)


def test_scalar_division():
    assert_poly_equal((X(1) * 3 + X(2)) / 3, X(1) + poly(({2: 1}, "1/3")))


def test_substitute():
    p = X(1) ** 2 + X(2) * 3
    assert_poly_equal(substitute(p, {1: X(3) + 1}), X(3) ** 2 + X(3) * 2 + 1 + X(2) * 3)
    assert_poly_equal(substitute(X(1, -2) * X(2), {1: X(0) * 2}), poly(({0: -2, 2: 1}, "1/4")))
    assert substitute(p, {}) == p

    with pytest.raises(NonInvertibleSubstitution):
        substitute(X(1, -1), {1: X(1) + X(2)})


@settings(max_examples=40, deadline=None)
@given(plain_polys, plain_polys)
def test_substitution_is_a_ring_homomorphism(p, q):
    assignment = {1: X(2) + 1, 2: X(3) * 2}
    assert substitute(p * q, assignment) == substitute(p, assignment) * substitute(q, assignment)
    assert substitute(p + q, assignment) == substitute(p, assignment) + substitute(q, assignment)


def test_evaluate():
    p = X(1, -1) * X(2) + Fraction(1, 2)
    assert evaluate(p, {1: 2, 2: 3}) == 2
    assert evaluate(X(PARAM_T, 2), {PARAM_T: Fraction(1, 3)}) == Fraction(1, 9)

    with pytest.raises(DomainViolation):
        evaluate(p, {1: 2})

    with pytest.raises(ZeroDenominator):
        evaluate(p, {1: 0, 2: 1})


def test_unify():
    assert unify(X(2) ** 2 * 3 + X(1) * X(3) * 4, 1) == 7
    assert unify(X(1) * X(2), 2) == 4
    assert unify(X(1) + 5, 0) == 5

    with pytest.raises(ZeroDenominator):
        unify(X(1, -1), 0)


def test_partial_derivative():
    p = X(1, -2) * X(2) + X(2) ** 3
    assert_poly_equal(partial_derivative(p, 1), X(1, -3) * X(2) * -2)
    assert_poly_equal(partial_derivative(p, 2), X(1, -2) + X(2) ** 2 * 3)
    assert partial_derivative(p, 4).is_zero


def test_grading():
    assert grading(X(2) ** 2 * 3 + X(1) * X(3) * 4) == (2, 4)
    assert grading(X(1) + X(2)) == (1, None)
    assert grading(X(1, -3) * X(2), x1_shift=3) == (1, 2)
    assert grading(MultiPoly.zero()) == (None, None)


def test_canonical_term_order():
    p = X(1) * X(3) * 4 + X(2) ** 2 * 3
    assert [coeff for _, coeff in p.terms()] == [3, 4]
