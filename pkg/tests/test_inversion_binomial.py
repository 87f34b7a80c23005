# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

from fractions import Fraction

import pytest

from pystirling.exceptions import DomainViolation, NotInvertible
from pystirling.inversion import (
    T,
    BinomialSeq,
    binomial_convolution_check,
    binomial_from_phi,
    binomial_generator,
    binomial_identity_suite,
    both_or_none_check,
    connection_polys,
    derivative_at_zero,
    falling_in_t,
    is_binomial,
    mullin_rota_check,
    mullin_rota_connect,
    recover_sequence,
    rescale,
    transfer_sequence,
    yang_check,
    yang_form,
)
from pystirling.polyring import MultiPoly
from pystirling.series import exp_full, expm, identity, logm, random_series
from tests.fixtures.families import rng
from tests.utils.poly_utils import assert_poly_equal, assert_series_equal

TRANSFER_CONSTANTS = [1, 2, -1, 3, Fraction(1, 2)]


@pytest.fixture
def falling_factorials():
    return binomial_from_phi(logm(5), 5)


@pytest.fixture
def not_binomial():
    return [MultiPoly.one(), T, T * T + 1]


def test_powers_of_t():
    seq = binomial_from_phi(identity(4), 4)
    for n in range(5):
        assert_poly_equal(seq[n], T**n)


def test_falling_factorials(falling_factorials):
    for n in range(6):
        assert_poly_equal(falling_factorials[n], falling_in_t(n))

    assert falling_factorials.value_at(3, 5) == 60
    assert falling_factorials.slopes()[3] == 2
    assert len(falling_factorials) == 6
    assert falling_factorials.max_n == 5


def test_touchard_polynomials():
    seq = binomial_from_phi(expm(4), 4)
    assert_poly_equal(seq[3], T + T * T * 3 + T**3)


def test_rescale_and_slope():
    p = T * T * 2 + T * 3
    assert_poly_equal(rescale(p, -1), T * T * 2 - T * 3)
    assert derivative_at_zero(p) == 3


def test_generator_invalid_input():
    with pytest.raises(NotInvertible):
        binomial_from_phi(exp_full(4), 3)

    with pytest.raises(DomainViolation):
        binomial_from_phi(logm(2), 4)


def test_generator_is_recovered(falling_factorials):
    assert_series_equal(binomial_generator(falling_factorials), logm(5))


def test_binomial_detection(falling_factorials, not_binomial):
    assert is_binomial(falling_factorials)
    assert binomial_convolution_check(falling_factorials)

    assert not is_binomial(not_binomial)
    assert not binomial_convolution_check(not_binomial)
    assert not is_binomial([MultiPoly.constant(2), T])
    assert not is_binomial(BinomialSeq((MultiPoly.one(), T * T)))


def test_random_sequences_are_binomial(rng):
    for _ in range(3):
        seq = binomial_from_phi(random_series(rng, 5, "invertible"), 5)
        assert is_binomial(seq)
        assert binomial_convolution_check(seq)


def test_identity_suite(falling_factorials, rng):
    report = binomial_identity_suite(falling_factorials, 4)
    assert report.passed
    assert report.checks > 0

    seq = binomial_from_phi(random_series(rng, 4, "invertible"), 4)
    assert binomial_identity_suite(seq).passed


def test_identity_suite_reports_failures(not_binomial):
    report = binomial_identity_suite(not_binomial)
    assert not report.passed
    assert all(failure.check for failure in report.failures)


def test_connection_coefficients(falling_factorials):
    powers = binomial_from_phi(identity(5), 5)
    coefficients = mullin_rota_connect(falling_factorials, powers)

    assert coefficients[3] == [0, 2, -3, 1]
    assert_poly_equal(connection_polys(coefficients)[4], falling_in_t(4))
    assert mullin_rota_check(falling_factorials, powers)
    assert mullin_rota_check(powers, falling_factorials)


def test_transfer_and_recover(falling_factorials, not_binomial):
    transferred = transfer_sequence(falling_factorials, TRANSFER_CONSTANTS)
    assert is_binomial(transferred)
    assert recover_sequence(transferred, TRANSFER_CONSTANTS) == list(falling_factorials)

    assert both_or_none_check(falling_factorials, TRANSFER_CONSTANTS)
    assert both_or_none_check(not_binomial, TRANSFER_CONSTANTS)


def test_transfer_needs_nonzero_leading_constant(falling_factorials):
    with pytest.raises(DomainViolation):
        recover_sequence(falling_factorials, [0, 1])

    with pytest.raises(DomainViolation):
        both_or_none_check(falling_factorials, [])


def test_yang_form(falling_factorials, not_binomial):
    assert yang_form(falling_factorials) == list(falling_factorials)
    assert yang_check(falling_factorials)
    assert not yang_check(not_binomial)
