"""
Printing helpers shared by the CLI actions.
"""

import json
from fractions import Fraction
from typing import List, Union

from pystirling.polyring import MultiPoly, emit
from pystirling.pydantic_utils import get_model_dump_json
from pystirling.series import PowerSeries, series_to_document
from pystirling.settings import OutputFormat
from pystirling.verification import VerifyReport


def emit_value(value: Union[MultiPoly, Fraction], output_format: OutputFormat) -> str:
    """
    Serializes a polynomial or a unified value. Rationals are printed as `p/q` in text and JSON (as a string) and
    as `\\frac{p}{q}` in LaTeX.
    """
    if isinstance(value, MultiPoly):
        return emit(value, output_format)

    text = str(value)
    match output_format:
        case "json":
            return json.dumps(text)
        case "latex" if value.denominator != 1:
            return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"
        case _:
            return text


def print_poly(value: Union[MultiPoly, Fraction], output_format: OutputFormat) -> None:
    print(emit_value(value, output_format))


def pretty_print(header: List[str], rows: List[List[str]]) -> None:
    """
    Prints a box table.

    Args:
        header(List[str]): Column titles.
        rows(List[List[str]]): Cells, one list per row with as many cells as there are titles.
    """
    widths = [max([len(title)] + [len(row[column]) for row in rows]) for column, title in enumerate(header)]

    def border(left: str, middle: str, right: str) -> str:
        return left + middle.join("─" * (width + 2) for width in widths) + right

    def line(cells: List[str]) -> str:
        return "│ " + " │ ".join(cell.ljust(width) for cell, width in zip(cells, widths)) + " │"

    print(border("┌", "┬", "┐"))
    print(line(header))
    print(border("├", "┼", "┤"))

    for row in rows:
        print(line(row))

    print(border("└", "┴", "┘"))


def latex_rows(rows: List[List[str]]) -> str:
    return "".join(" & ".join(row) + " \\\\\n" for row in rows)


def series_text(f: PowerSeries, output_format: OutputFormat) -> str:
    """
    A series as its JSON document, as `c_0 + c_1 x + ...` in text or with `\\frac` coefficients in LaTeX.
    """
    if output_format == "json":
        return json.dumps(series_to_document(f))

    parts: List[str] = []
    for n, coeff in enumerate(f.coeffs):
        if coeff == 0:
            continue
        power = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
        value = emit_value(coeff, output_format)
        parts.append(f"{value}*{power}" if power else value)

    parts.append(f"O(x^{f.order + 1})")
    return " + ".join(parts)


def print_report(report: VerifyReport, output_format: OutputFormat) -> None:
    """
    Prints the outcome of a suite, either as JSON or as a summary table followed by a table of failures.
    """
    if output_format == "json":
        print(get_model_dump_json(report))
        return

    status = "PASSED" if report.passed else "FAILED"
    summary = [report.suite, str(report.checks), str(len(report.failures)), status]
    pretty_print(["Suite", "Checks", "Failures", "Status"], [summary])

    if report.failures:
        pretty_print(
            ["Check", "Witness", "Left", "Right"],
            [[failure.check, failure.witness, failure.lhs, failure.rhs] for failure in report.failures],
        )
