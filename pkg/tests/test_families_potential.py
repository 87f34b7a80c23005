# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

from fractions import Fraction

import pytest

from pystirling.families import (
    binomial,
    bell,
    bell_via_bertrand,
    bell_via_potential,
    convolution_check,
    factorial_poly,
    falling,
    logarithmic,
    logarithmic_via_potential,
    potential,
    potential_hat,
    reciprocal_poly,
    reciprocal_poly_hat,
    rho,
    rising,
    stirling1,
    stirling1_via_potential,
    stirling_a,
    stirling_a_via_potential,
    tree_poly,
    tree_poly_hat,
)
from pystirling.polyring import X, MultiPoly, unify
from tests.utils.poly_utils import assert_poly_equal, poly


def test_falling_and_binomial():
    assert falling(5, 2) == 20
    assert falling(-3, 2) == 12
    assert falling(4, -2) == Fraction(1, 30)
    assert falling(Fraction(1, 2), 2) == Fraction(-1, 4)
    assert rising(3, 3) == 60
    assert binomial(5, 2) == 10
    assert binomial(-3, 2) == 6
    assert binomial(4, -1) == 0
    assert binomial(2, 5) == 0


def test_potential_values():
    assert_poly_equal(potential(2, 2), poly(({1: 2}, 2), ({2: 1}, 2)))
    assert_poly_equal(potential(1, -1), X(1) * -1)
    assert potential(0, 5) == MultiPoly.one()
    assert potential(-1, 2).is_zero
    assert_poly_equal(potential_hat(1, 3), X(0, 2) * X(1) * 3)


def test_potential_reduces_to_bell_at_unit_constant():
    # sum over k of falling powers of P^ at X_0 = 1 agrees with B through its defining sum
    for n in range(6):
        for k in range(4):
            expected = MultiPoly.zero()
            for j in range(n + 1):
                expected = expected + bell(n, j) * falling(k, j)
            assert potential(n, k) == expected


def test_reciprocal_polynomials():
    assert_poly_equal(reciprocal_poly_hat(0), X(0, -1))
    assert_poly_equal(reciprocal_poly(1), X(1) * -1)
    assert_poly_equal(reciprocal_poly(2), X(1) ** 2 * 2 - X(2))
    for n in range(6):
        assert reciprocal_poly_hat(n) == potential_hat(n, -1)


def test_rho_vanishes_for_odd_indices():
    assert rho(1) == Fraction(-1, 2)
    assert rho(2) == Fraction(1, 6)
    for s in (3, 5, 7):
        assert rho(s) == 0


def test_tree_polynomials():
    for n in range(1, 7):
        assert unify(tree_poly(n), 1) == n ** (n - 1)
        assert tree_poly_hat(n) == potential_hat(n - 1, n)

    with pytest.raises(ValueError):
        tree_poly_hat(0)


def test_potential_routes():
    for n in range(9):
        for k in range(n + 1):
            assert bell_via_potential(n, k) == bell(n, k), f"B({n}, {k})"
            assert stirling_a_via_potential(n, k) == stirling_a(n, k), f"A({n}, {k})"
            assert stirling1_via_potential(n, k) == stirling1(n, k), f"s1({n}, {k})"


def test_factorial_polynomials():
    assert factorial_poly(3, 0) == MultiPoly.zero()
    assert factorial_poly(0, 0) == MultiPoly.one()
    assert_poly_equal(factorial_poly(1, 1), X(1))


def test_bell_as_binomial_inverse_of_potential():
    for n in range(8):
        for k in range(n + 1):
            assert_poly_equal(bell_via_bertrand(n, k), bell(n, k))

    assert bell_via_bertrand(3, -1) == MultiPoly.zero()


def test_logarithmic_polynomials_from_potential():
    for n in range(1, 8):
        assert_poly_equal(logarithmic_via_potential(n), logarithmic(n))

    with pytest.raises(ValueError):
        logarithmic_via_potential(0)


@pytest.mark.parametrize("r, s", [(0, 0), (1, 2), (3, 1), (-1, 2), (-2, -1), (2, -3)])
def test_potential_convolution(r, s):
    for n in range(7):
        assert convolution_check(n, r, s)
