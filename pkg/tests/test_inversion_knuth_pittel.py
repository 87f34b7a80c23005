# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

from pystirling.inversion import (
    is_binomial,
    knuth_pittel,
    knuth_pittel_coefficients,
    knuth_pittel_sequence,
    knuth_pittel_via_bell,
    knuth_pittel_via_series,
    single_cycle_count,
    tree_function,
)
from pystirling.polyring import MultiPoly, unify
from pystirling.verification.values import KNUTH_PITTEL_VALUES
from tests.utils.poly_utils import assert_poly_equal


def test_known_values():
    for n, expected in KNUTH_PITTEL_VALUES.items():
        assert_poly_equal(knuth_pittel(n), expected)

    assert_poly_equal(knuth_pittel(0), MultiPoly.one())
    assert knuth_pittel_coefficients(3) == [0, 17, 9, 1]


def test_routes_agree():
    for n in range(7):
        expected = knuth_pittel(n)
        assert_poly_equal(knuth_pittel_via_series(n), expected)
        assert_poly_equal(knuth_pittel_via_bell(n), expected)


def test_coefficients_count_mappings():
    for n in range(1, 6):
        assert unify(knuth_pittel(n), 1) == n**n


def test_single_cycle_counts():
    assert [single_cycle_count(r) for r in range(1, 6)] == [1, 3, 17, 142, 1569]


def test_tree_function():
    assert tree_function(4).taylor_coefficients() == [0, 1, 2, 9, 64]


def test_sequence_is_binomial():
    seq = knuth_pittel_sequence(5)
    assert is_binomial(seq)
    assert_poly_equal(seq[3], knuth_pittel(3))
