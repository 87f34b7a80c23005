# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

import pytest

from pystirling.exceptions import CompositionCaseViolation, DomainViolation, NotAUnit, NotInvertible, UnsupportedTerm
from pystirling.families import (
    Compose,
    Derivative,
    Fixed,
    Inverse,
    Placeholder,
    Power,
    Product,
    Reciprocal,
    Sum,
    at_series,
    inverse_power_check,
    omega,
    potential_hat,
    power_of_function_check,
    realize,
    reciprocal_poly_hat,
    stirling_a,
)
from pystirling.polyring import X, MultiPoly
from pystirling.series import LaurentPoly1, expm, logm, random_series
from tests.fixtures.families import rng

PHI = Placeholder()
PHI_0 = Placeholder(vanishes=True)


def test_placeholder():
    assert omega(3, PHI) == X(3)
    assert omega(0, PHI) == X(0)
    assert omega(0, PHI_0).is_zero
    assert omega(2, Derivative(PHI)) == X(3)


def test_named_polynomials():
    for n in range(6):
        assert omega(n, Reciprocal(PHI)) == reciprocal_poly_hat(n)
        assert omega(n, Power(PHI, 3)) == potential_hat(n, 3)
        assert omega(n, Power(PHI, -2)) == potential_hat(n, -2)


def test_inverse_routes_agree():
    for n in range(1, 7):
        assert omega(n, Inverse(PHI_0)) == stirling_a(n, 1)
        assert omega(n, Inverse(PHI_0), inverse_route="lagrange") == stirling_a(n, 1)


def test_omega_evaluates_to_taylor_coefficients(rng):
    phi = random_series(rng, 6, "unit")
    phi_0 = random_series(rng, 6, "invertible")
    terms = [
        (Sum(PHI, Fixed(expm(6))), phi),
        (Product(PHI, PHI), phi),
        (Power(PHI, -1), phi),
        (Compose(Fixed(logm(6)), PHI_0), phi_0),
        (Compose(LaurentPoly1({-1: 2, 2: 1}), PHI), phi),
        (Inverse(PHI_0), phi_0),
    ]

    for term, series in terms:
        concrete = realize(term, series)
        for n in range(5):
            assert at_series(omega(n, term), series) == concrete.taylor(n)


def test_invalid_terms():
    with pytest.raises(NotAUnit):
        omega(1, Reciprocal(PHI_0))

    with pytest.raises(CompositionCaseViolation):
        omega(1, Compose(Fixed(expm(3)), PHI))

    with pytest.raises(CompositionCaseViolation):
        omega(1, Compose(LaurentPoly1({-1: 1}), PHI_0))

    with pytest.raises(NotInvertible):
        omega(1, Inverse(PHI))

    with pytest.raises(DomainViolation):
        omega(5, Fixed(expm(3)))

    with pytest.raises(DomainViolation):
        omega(-1, PHI)

    with pytest.raises(UnsupportedTerm):
        omega(1, "phi")


def test_powers_of_the_inverse_function(rng):
    terms = [PHI_0, Compose(Fixed(random_series(rng, 5, "invertible")), PHI_0)]
    for term in terms:
        for n in range(1, 5):
            for k in range(1, n + 1):
                assert inverse_power_check(term, n, k)

    with pytest.raises(DomainViolation):
        inverse_power_check(PHI_0, 3, 0)


def test_powers_of_a_function(rng):
    terms = [PHI_0, Compose(Fixed(random_series(rng, 5, "invertible")), PHI_0)]
    for term in terms:
        for n in range(1, 5):
            for k in range(1, n + 1):
                assert power_of_function_check(term, n, k)

    with pytest.raises(DomainViolation):
        power_of_function_check(PHI_0, 2, 3)
