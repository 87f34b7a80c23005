"""
Text, LaTeX and JSON emission of polynomials. JSON documents are validated with pydantic models.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List

from pydantic import BaseModel, Field

from pystirling.exceptions import InvalidSeriesDocument
from pystirling.polyring.monomial import PARAMETERS, Monomial
from pystirling.polyring.multipoly import MultiPoly
from pystirling.pydantic_utils import get_model_dump, parse_documents


class CoeffDocument(BaseModel):
    """
    Rational coefficient with numerator and denominator as decimal strings.
    """

    num: str
    den: str = Field(default="1")


class TermDocument(BaseModel):
    """
    A single term, `exps` maps variable indices (as strings) to exponents.
    """

    coeff: CoeffDocument
    exps: Dict[str, int] = Field(default_factory=dict)


def _variable_name(index: int) -> str:
    return PARAMETERS.get(index, f"X{index}")


def _latex_variable(index: int) -> str:
    return PARAMETERS.get(index, f"X_{{{index}}}")


def _monomial_text(monomial: Monomial) -> str:
    factors = []
    for index, exponent in monomial:
        name = _variable_name(index)
        factors.append(name if exponent == 1 else f"{name}^{exponent}")
    return "*".join(factors)


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def to_text(p: MultiPoly) -> str:
    """
    ASCII form in canonical term order, e.g. `3*X2^2 + 4*X1*X3` or `-X1^-3*X2`. The zero polynomial is `0`.
    """
    if p.is_zero:
        return "0"

    parts: List[str] = []
    for position, (monomial, coeff) in enumerate(p.terms()):
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        body = _monomial_text(monomial)

        if not body:
            text = _fraction_text(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{_fraction_text(magnitude)}*{body}"

        if position == 0:
            parts.append(f"-{text}" if sign == "-" else text)
        else:
            parts.append(f"{sign} {text}")

    return " ".join(parts)


def to_latex(p: MultiPoly) -> str:
    """
    LaTeX form with subscripted indeterminates, e.g. `3X_{2}^{2}+4X_{1}X_{3}`.
    """
    if p.is_zero:
        return "0"

    parts: List[str] = []
    for position, (monomial, coeff) in enumerate(p.terms()):
        magnitude = abs(coeff)
        factors = "".join(
            _latex_variable(index) if exponent == 1 else f"{_latex_variable(index)}^{{{exponent}}}"
            for index, exponent in monomial
        )

        if magnitude.denominator != 1:
            scalar = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
        elif magnitude != 1 or not factors:
            scalar = str(magnitude.numerator)
        else:
            scalar = ""

        sign = "-" if coeff < 0 else ("" if position == 0 else "+")
        parts.append(f"{sign}{scalar}{factors}")

    return "".join(parts)


def to_json(p: MultiPoly) -> List[Dict[str, Any]]:
    """
    JSON-compatible list of terms in canonical order.
    """
    return [
        get_model_dump(
            TermDocument(
                coeff=CoeffDocument(num=str(coeff.numerator), den=str(coeff.denominator)),
                exps={str(index): exponent for index, exponent in monomial},
            )
        )
        for monomial, coeff in p.terms()
    ]


def from_json(data: Any) -> MultiPoly:
    """
    Parses the output of `to_json` (or its serialized string form) back into a polynomial.

    Raises:
        InvalidSeriesDocument: If the document does not follow the term schema.
    """
    documents = parse_documents(TermDocument, data, "<polynomial>")
    try:
        return MultiPoly.from_terms(
            (
                {int(index): exponent for index, exponent in document.exps.items()},
                Fraction(int(document.coeff.num), int(document.coeff.den)),
            )
            for document in documents
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidSeriesDocument("<polynomial>", str(exc)) from exc


def dumps(p: MultiPoly) -> str:
    return json.dumps(to_json(p))


def emit(p: MultiPoly, output_format: str = "text") -> str:
    """
    Serializes `p` as `text`, `json` or `latex`.
    """
    match output_format:
        case "text":
            return to_text(p)
        case "json":
            return dumps(p)
        case "latex":
            return to_latex(p)
        case _:
            raise ValueError(f"Unknown output format {output_format}")
