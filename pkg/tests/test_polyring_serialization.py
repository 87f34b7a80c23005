# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

import json

import pytest
from hypothesis import given, settings

from pystirling.derived import lah_signed
from pystirling.exceptions import InvalidSeriesDocument
from pystirling.families import bell
from pystirling.polyring import PARAM_T, X, MultiPoly, dumps, emit, from_json, to_json, to_latex, to_text
from tests.utils.poly_utils import assert_document_equal, poly
from tests.utils.strategies import polys


def test_text_form():
    assert to_text(bell(4, 2)) == "3*X2^2 + 4*X1*X3"
    assert to_text(MultiPoly.zero()) == "0"
    assert to_text(lah_signed(5, 5)) == "-1"
    assert to_text(X(1, -3) * X(2) * -1) == "-X1^-3*X2"
    assert to_text(X(1) / 2 - 1) == "-1 + 1/2*X1"
    assert to_text(X(PARAM_T) * 3 + X(PARAM_T, 2)) == "3*t + t^2"


def test_latex_form():
    assert to_latex(bell(4, 2)) == "3X_{2}^{2}+4X_{1}X_{3}"
    assert to_latex(X(1, -2) * X(2) / 2) == "\\frac{1}{2}X_{1}^{-2}X_{2}"
    assert to_latex(MultiPoly.constant(-1)) == "-1"
    assert to_latex(MultiPoly.zero()) == "0"


def test_json_form():
    document = to_json(poly(({1: -1, 2: 1}, "-3/2")))

    assert document == [{"coeff": {"num": "-3", "den": "2"}, "exps": {"1": -1, "2": 1}}]
    assert json.loads(dumps(MultiPoly.zero())) == []


@settings(max_examples=100, deadline=None)
@given(polys)
def test_json_round_trip(p):
    assert from_json(dumps(p)) == p
    assert from_json(to_json(p)) == p


def test_invalid_json_documents():
    with pytest.raises(InvalidSeriesDocument):
        from_json([{"coeff": {"num": "1", "den": "0"}, "exps": {}}])

    with pytest.raises(InvalidSeriesDocument):
        from_json([{"coeff": {"num": "one"}, "exps": {}}])

    with pytest.raises(InvalidSeriesDocument):
        from_json('[{"coeff": ')

    with pytest.raises(InvalidSeriesDocument):
        from_json([{"exps": {"1": 2}}])


def test_emit():
    p = bell(3, 2)

    assert emit(p) == "3*X1*X2"
    assert emit(p, "latex") == "3X_{1}X_{2}"
    assert_document_equal(emit(p, "json"), '[{"coeff": {"num": "3", "den": "1"}, "exps": {"1": 1, "2": 1}}]')

    with pytest.raises(ValueError):
        emit(p, "yaml")
