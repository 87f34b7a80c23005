# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

from fractions import Fraction

import pytest

from pystirling.exceptions import CompositionCaseViolation, DomainViolation, NotInvertible
from pystirling.families import clear_caches, stirling_a
from pystirling.inversion import (
    FormCase,
    SeriesForm,
    comtet_thm_f,
    comtet_thm_f_self_inverse,
    conversion_constants,
    conversion_round_trip,
    gamma,
    gamma_bar,
    lagrange_conversion_check,
    lagrange_round_trip,
    lambda_classical,
    lambda_classical_via_full_bell,
    lambda_classical_via_stirling,
    lambda_general,
    lambda_self_inverse,
    lambda_special_identity,
    lambda_special_identity_by_definition,
    lambda_special_unit,
    lambda_special_unit_by_definition,
    represent,
    round_trip_thm_f,
    special_inverse_self_inverse,
)
from pystirling.inversion.lagrange import FORM_CACHE_SIZE
from pystirling.polyring import X, MultiPoly
from pystirling.series import PowerSeries, exp_full, expm, identity, logm, power_of_x, random_series
from pystirling.verification.values import LAMBDA_2
from tests.fixtures.families import cleared_caches, rng
from tests.utils.poly_utils import assert_poly_equal


def plain_form(order: int) -> SeriesForm:
    return SeriesForm.of(PowerSeries.constant(1, order), identity(order))


def test_classical_routes_agree():
    for n in range(1, 7):
        expected = lambda_classical(n)
        assert_poly_equal(lambda_classical_via_full_bell(n), expected)
        assert_poly_equal(lambda_classical_via_stirling(n), expected)


def test_classical_values():
    assert_poly_equal(lambda_classical(1), X(1, -1))
    assert_poly_equal(lambda_classical(2), LAMBDA_2)


def test_classical_is_self_inverse():
    for n in range(1, 6):
        assert lambda_self_inverse(n)


def test_classical_needs_positive_index():
    with pytest.raises(ValueError):
        lambda_classical(0)

    with pytest.raises(ValueError):
        lambda_classical_via_full_bell(-1)


def test_form_case_inference():
    assert plain_form(4).case is FormCase.UNIT
    assert SeriesForm.of(identity(4), expm(4)).case is FormCase.INVERTIBLE


def test_invalid_forms():
    with pytest.raises(NotInvertible):
        SeriesForm.of(identity(4), exp_full(4))

    with pytest.raises(CompositionCaseViolation):
        SeriesForm.of(power_of_x(2, 4), identity(4))

    with pytest.raises(CompositionCaseViolation):
        SeriesForm(identity(4), identity(4), FormCase.UNIT)


def test_plain_form_conversion_is_trivial():
    form = plain_form(6)
    for n in range(1, 6):
        assert_poly_equal(gamma(n, form), X(n))
        assert_poly_equal(gamma_bar(n, form), X(n))


def test_plain_forms_give_classical_polynomials():
    form = plain_form(7)
    for n in range(1, 6):
        assert_poly_equal(lambda_general(n, form, form), stirling_a(n, 1))


def test_conversion_caches_are_bounded_and_cleared(cleared_caches):
    form = plain_form(5)
    gamma(3, form)
    lambda_general(3, form, form)

    for cached in (gamma, lambda_general):
        assert cached.cache_info().maxsize == FORM_CACHE_SIZE
        assert cached.cache_info().currsize > 0

    clear_caches()
    assert gamma.cache_info().currsize == 0
    assert lambda_general.cache_info().currsize == 0


def test_short_forms_are_rejected():
    with pytest.raises(DomainViolation):
        gamma(5, plain_form(3))

    with pytest.raises(DomainViolation):
        gamma_bar(4, SeriesForm.of(identity(4), logm(4)))


def test_conversion_round_trips(rng):
    unit = SeriesForm.of(random_series(rng, 6, "unit"), random_series(rng, 6, "invertible"))
    invertible = SeriesForm.of(random_series(rng, 6, "invertible"), random_series(rng, 6, "invertible"))

    assert conversion_round_trip(unit, 4)
    assert conversion_round_trip(invertible, 4)


def test_lagrange_round_trips():
    forms = [plain_form(6), SeriesForm.of(identity(6), expm(6)), SeriesForm.of(exp_full(6), logm(6))]
    for source in forms:
        for target in forms:
            assert lagrange_round_trip(source, target, 4)


def test_represent_reads_back_constants():
    form = SeriesForm.of(exp_full(5), logm(5))
    constants = [0, 1, 2, Fraction(-1, 2), 3, 1]

    f = represent(form, constants)
    assert conversion_constants(form, f, 5) == [Fraction(value) for value in constants[:5]]


def test_lagrange_conversion():
    unit = SeriesForm.of(exp_full(5), logm(5))
    invertible = SeriesForm.of(identity(5), expm(5))

    assert lagrange_conversion_check(unit, unit, [0, 2, -1, 3, 1, 2], 3)
    assert lagrange_conversion_check(unit, invertible, [0, 2, -1, 3, 1, 2], 3)
    assert lagrange_conversion_check(invertible, unit, [1, 2, 0, -1, 1, 2], 3)


def test_lagrange_conversion_needs_invertible_series():
    form = plain_form(5)
    with pytest.raises(NotInvertible):
        lagrange_conversion_check(form, form, [0, 0, 1, 2, 3, 4], 3)


def test_special_closed_forms(rng):
    phi = random_series(rng, 5, "invertible")
    psi = random_series(rng, 5, "invertible")

    for n in range(1, 4):
        assert_poly_equal(lambda_special_unit(n, phi, psi), lambda_special_unit_by_definition(n, phi, psi))
        assert_poly_equal(lambda_special_identity(n, phi, psi), lambda_special_identity_by_definition(n, phi, psi))


def test_spaced_series_inversion():
    assert_poly_equal(comtet_thm_f(0, 2), MultiPoly.one())
    assert_poly_equal(comtet_thm_f(1, 1), -X(1))

    for s in (1, 2, 3):
        assert round_trip_thm_f([1, 2, -1, 3, Fraction(1, 2)], s, 9)
        for n in range(1, 5):
            assert comtet_thm_f_self_inverse(n, s)


def test_spaced_series_inversion_invalid_input():
    with pytest.raises(ValueError):
        comtet_thm_f(2, 0)

    with pytest.raises(DomainViolation):
        round_trip_thm_f([2, 1], 1, 5)


def test_special_inverse_is_self_inverse():
    for s in (1, 2):
        for n in range(1, 4):
            assert special_inverse_self_inverse(n, s)
