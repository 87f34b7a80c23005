# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

from fractions import Fraction

import pytest
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from pystirling.families import (
    FamilyId,
    assoc_bell,
    bell,
    bell_codiagonal,
    bell_derivative_check,
    bell_partition_sum,
    companion_representation_check,
    complete_bell,
    geometric,
    logarithmic,
    partition_types,
    register_table,
    stirling1,
    stirling2,
    stirling_a,
    stirling_a_partition_sum,
    stirling_a_via_assoc_bell,
    stirling_triangle,
)
from pystirling.polyring import X, MultiPoly, grading, partial_derivative, unify
from tests.fixtures.families import cleared_caches
from tests.utils.poly_utils import assert_poly_equal, poly


def test_bell_values():
    assert bell(0, 0) == MultiPoly.one()
    assert bell(3, 0).is_zero
    assert_poly_equal(bell(3, 2), poly(({1: 1, 2: 1}, 3)))
    assert_poly_equal(bell(4, 2), poly(({2: 2}, 3), ({1: 1, 3: 1}, 4)))
    assert_poly_equal(bell(5, 2), poly(({1: 1, 4: 1}, 5), ({2: 1, 3: 1}, 10)))


def test_bell_outside_the_triangle_is_zero():
    assert bell(-1, 2).is_zero
    assert bell(2, 3).is_zero
    assert bell(3, -1).is_zero
    assert stirling_a(2, 5).is_zero


def test_stirling_a_values():
    assert_poly_equal(stirling_a(1, 1), X(1, -1))
    assert_poly_equal(stirling_a(2, 1), X(1, -3) * X(2) * -1)
    assert_poly_equal(stirling_a(3, 1), poly(({1: -5, 2: 2}, 3), ({1: -4, 3: 1}, -1)))
    assert_poly_equal(stirling_a(3, 2), poly(({1: -4, 2: 1}, -3)))
    assert_poly_equal(stirling_a(4, 4), X(1, -4))


def test_partition_sum_route():
    for n in range(11):
        for k in range(n + 1):
            assert bell_partition_sum(n, k) == bell(n, k), f"B({n}, {k})"


def test_stirling_a_routes():
    for n in range(9):
        for k in range(n + 1):
            assert stirling_a_partition_sum(n, k) == stirling_a(n, k), f"A({n}, {k})"
            assert stirling_a_via_assoc_bell(n, k) == stirling_a(n, k), f"A({n}, {k})"


def test_grading_of_the_triangles():
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert grading(bell(n, k)) == (k, n)
            assert grading(stirling_a(n, k)) == (n - 1, 2 * n - 1 - k)
            assert grading(stirling_a(n, k), x1_shift=0) == (-n, -k)


def test_grading_of_a_companion_entry():
    assert stirling_a(4, 3) == X(2) * X(1, -5) * -6
    assert grading(stirling_a(4, 3)) == (3, 4)


def test_orthogonality():
    for n in range(9):
        for k in range(n + 1):
            total = MultiPoly.zero()
            for j in range(k, n + 1):
                total = total + stirling_a(n, j) * bell(j, k)
            assert total == (MultiPoly.one() if n == k else MultiPoly.zero())


def test_unification_against_sympy():
    for n in range(9):
        for k in range(n + 1):
            assert stirling2(n, k) == int(sympy_stirling(n, k, kind=2))
            assert stirling1(n, k) == int(sympy_stirling(n, k, kind=1, signed=True))

    assert stirling2(4, 2) == 7
    assert abs(stirling1(4, 2)) == 11


def test_stirling_triangles():
    assert stirling_triangle(2, 3) == [[1], [0, 1], [0, 1, 1], [0, 1, 3, 1]]
    assert stirling_triangle(1, 3)[3] == [0, 2, -3, 1]


def test_derived_sums():
    assert unify(complete_bell(4), 1) == 15
    assert unify(geometric(3), 1) == 13
    assert unify(logarithmic(4), 1) == 0
    assert_poly_equal(logarithmic(2), X(2) - X(1) ** 2)


def test_associate_bell():
    assert_poly_equal(assoc_bell(4, 2), poly(({2: 2}, 3)))
    assert assoc_bell(3, 2).is_zero
    assert unify(assoc_bell(6, 2), 1) == 25


def test_codiagonal_expansion():
    for n in range(2, 9):
        for k in range(1, n):
            assert bell_codiagonal(n, k) == bell(n, n - k), f"B({n}, {n - k})"

    with pytest.raises(ValueError):
        bell_codiagonal(3, 0)


def test_partition_types():
    types = partition_types(4, 2)

    assert len(types) == 2
    assert sorted(partition.multiplicities for partition in types) == [(0, 2), (1, 0, 1)]
    assert sum(partition.set_partition_count() for partition in types) == 7
    assert partition_types(0, 0)[0].length == 0
    assert not partition_types(2, 3)


def test_family_table_caches(cleared_caches):
    calls = []

    def compute(n: int, k: int) -> MultiPoly:
        calls.append((n, k))
        return X(n) * k

    table = register_table(FamilyId.GENERATED, compute)

    assert table.get(2, 3) == X(2) * 3
    assert table(2, 3) == X(2) * 3
    assert calls == [(2, 3)]
    assert table.cached_keys() == [(2, 3)]
    assert len(table) == 1

    table.clear()
    assert len(table) == 0
    assert table.recompute(1, 1) == X(1)


def test_bell_derivatives_drop_one_block():
    for n in range(9):
        for k in range(n + 1):
            assert bell_derivative_check(n, k)

    assert_poly_equal(partial_derivative(bell(4, 2), 2), bell(2, 1) * 6)


def test_companion_is_bell_at_its_first_column():
    for n in range(8):
        for k in range(n + 1):
            assert companion_representation_check(n, k)
