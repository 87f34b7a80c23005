# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

from fractions import Fraction

import pytest

from pystirling.derived import (
    BRepFamily,
    bell_generator,
    brep_from_generator,
    cycle_family,
    forest_family,
    lah_signed_family,
)
from pystirling.exceptions import DomainViolation, NotRegular
from pystirling.extended import (
    basic_reciprocity,
    bell_ext,
    bell_via_assoc,
    family_ext,
    family_ext_orthogonal,
    general_reciprocity,
    gould_check,
    potential_reciprocity,
    power_coefficient,
    reciprocity_check,
    schlaefli_check,
    schloemilch_schlaefli,
    schloemilch_schlaefli_general,
    schur_jabotinsky,
    self_reciprocity,
    stirling_a_ext,
)
from pystirling.families import bell, stirling_a
from pystirling.polyring import X
from pystirling.series import expm, geometric, identity, logm
from tests.utils.poly_utils import assert_poly_equal

WINDOW = range(-3, 4)


def test_bell_companion_reciprocity():
    for n in range(-4, 5):
        for k in range(-4, 5):
            assert reciprocity_check(n, k)


def test_generated_bell_family_extends():
    family = BRepFamily(bell_generator)
    for n in WINDOW:
        for k in WINDOW:
            assert_poly_equal(family_ext(family, n, k), bell_ext(n, k))
            assert_poly_equal(family_ext_orthogonal(family, n, k), stirling_a_ext(n, k))


@pytest.mark.parametrize("family", [cycle_family(), forest_family(), lah_signed_family()], ids=lambda f: f.name)
def test_general_reciprocity(family):
    for n in WINDOW:
        for k in WINDOW:
            assert general_reciprocity(family, n, k)


def test_signed_lah_is_self_reciprocal():
    family = lah_signed_family()
    for n in WINDOW:
        for k in WINDOW:
            assert self_reciprocity(family, n, k)


def test_irregular_families_do_not_extend():
    family = brep_from_generator([X(1) + X(2)])
    with pytest.raises(NotRegular):
        family_ext(family, -1, -1)

    with pytest.raises(NotRegular):
        general_reciprocity(family, 1, 1)


def test_bell_via_associates():
    for n in range(7):
        for k in range(n + 1):
            assert_poly_equal(bell_via_assoc(n, k), bell(n, n - k))

    with pytest.raises(DomainViolation):
        bell_via_assoc(2, 3)


def test_schloemilch_schlaefli_expansion():
    for n in range(7):
        for k in range(n + 1):
            assert_poly_equal(schloemilch_schlaefli(n, k), stirling_a(n, n - k))

    with pytest.raises(DomainViolation):
        schloemilch_schlaefli(1, 2)


def test_schloemilch_schlaefli_for_families():
    for family in (cycle_family(), lah_signed_family()):
        for n in range(5):
            for k in range(n + 1):
                assert schloemilch_schlaefli_general(family, n, k)

    with pytest.raises(DomainViolation):
        schloemilch_schlaefli_general(cycle_family(), 2, -1)


def test_stirling_number_expansions():
    for n in range(7):
        for k in range(n + 1):
            assert schlaefli_check(n, k)
            assert gould_check(n, k)


def test_basic_reciprocity():
    for n in range(6):
        for k in range(1, 4):
            assert basic_reciprocity(n, k)


def test_potential_reciprocity():
    for n in range(1, 5):
        for k in range(-2, n + 1):
            assert potential_reciprocity(n, k)
    assert potential_reciprocity(-2, -3)

    with pytest.raises(DomainViolation):
        potential_reciprocity(0, 0)

    with pytest.raises(DomainViolation):
        potential_reciprocity(2, 3)


def test_power_coefficients():
    assert power_coefficient(logm(6), 3, 1) == Fraction(1, 3)
    assert power_coefficient(geometric(6), 4, 2) == 3
    assert power_coefficient(identity(4), 2, 1) == 0
    assert power_coefficient(identity(4), 1, 3) == 0
    assert power_coefficient(geometric(6), 2, -1) == 0

    with pytest.raises(DomainViolation):
        power_coefficient(logm(3), 6, 1)


@pytest.mark.parametrize("phi", [expm(9), logm(9), geometric(9)], ids=["expm", "logm", "geometric"])
def test_schur_jabotinsky(phi):
    for n in range(1, 5):
        for k in range(-4, n + 1):
            assert schur_jabotinsky(phi, n, k)


def test_schur_jabotinsky_invalid_indices():
    with pytest.raises(DomainViolation):
        schur_jabotinsky(expm(4), 0, 0)

    with pytest.raises(DomainViolation):
        schur_jabotinsky(expm(4), 2, 3)
