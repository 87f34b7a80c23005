# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

import json
import os

import pytest
from hypothesis import given, settings

from pystirling.exceptions import InvalidSeriesDocument, NotInvertible
from pystirling.series import (
    PowerSeries,
    compose_0case,
    expm,
    geometric,
    identity,
    invert_series,
    load_series,
    logm,
    random_series,
    series_from_document,
    series_to_document,
)
from pystirling.series.inverse import inverse_by_lie_derivatives, inverse_by_stirling_polynomials
from tests.fixtures.families import rng, series_file
from tests.utils.strategies import series


def test_invert_known_series():
    assert invert_series(logm(6)) == expm(6)
    assert invert_series(expm(6)) == logm(6)
    assert invert_series(identity(5)) == identity(5)
    # x / (1 - x) inverts to x / (1 + x)
    assert invert_series(geometric(5)).coeffs == (0, 1, -1, 1, -1, 1)


def test_random_inversions_round_trip(rng):
    for _ in range(20):
        f = random_series(rng, 8, "invertible")
        inverse = invert_series(f)

        assert compose_0case(inverse, f) == identity(8)
        assert compose_0case(f, inverse) == identity(8)


@settings(max_examples=25, deadline=None)
@given(series(order=6, kind="invertible"))
def test_both_routes_agree(f):
    assert inverse_by_stirling_polynomials(f) == inverse_by_lie_derivatives(f)


def test_not_invertible():
    with pytest.raises(NotInvertible):
        invert_series(PowerSeries([1, 1], 4))

    with pytest.raises(NotInvertible):
        invert_series(PowerSeries([0, 0, 1], 4))


def test_unchecked_inversion():
    assert invert_series(logm(5), check=False) == expm(5)


def test_series_documents(series_file):
    f = load_series(series_file)

    assert f == logm(4)
    assert series_to_document(f) == {"order": 4, "taylor": ["0", "1", "-1", "2", "-6"]}
    assert series_from_document(series_to_document(expm(3))) == expm(3)


def test_invalid_series_documents(tmp_path):
    with pytest.raises(InvalidSeriesDocument):
        series_from_document({"order": 3, "taylor": ["0", "1"]})

    with pytest.raises(InvalidSeriesDocument):
        series_from_document({"order": 1, "taylor": ["0", "x"]})

    with pytest.raises(InvalidSeriesDocument):
        load_series(os.path.join(tmp_path, "missing.json"))

    path = os.path.join(tmp_path, "broken.json")
    with open(path, "w", encoding="utf-8") as f:
        f.write("{ not json")

    with pytest.raises(InvalidSeriesDocument):
        load_series(path)
