"""
Prints the triangle of a polynomial family.
"""

import json
from fractions import Fraction
from typing import List, Optional

from pystirling.cli.actions.family import check_routes
from pystirling.cli.utils import emit_value, latex_rows, lookup_family, pretty_print
from pystirling.logger import logger
from pystirling.polyring import MultiPoly, unify
from pystirling.settings import load_settings


def table(
    name: str,
    config_path: Optional[str] = None,
    max_n: Optional[int] = None,
    output_format: Optional[str] = None,
    unify_at: Optional[Fraction] = None,
    check: Optional[bool] = None,
) -> List[List[MultiPoly]]:
    """
    Prints Q(n, k) for 0 <= k <= n <= max_n. Text output is a box table with one row per (n, k), JSON output a
    list of `{"n", "k", "value"}` objects and LaTeX output one `n & k & value` row per entry.

    Args:
        name(str): Name of the family.
        config_path(str, optional): Path to a config file. Defaults to None.
        max_n(int, optional): Last row. Defaults to the configured `max_n`.
        output_format(str, optional): `text`, `json` or `latex`. Defaults to the configured format.
        unify_at(Fraction, optional): Prints unifications at this value instead of polynomials.
        check(bool, optional): Whether to compare every entry against the independent routes.

    Raises:
        UnknownFamily: If the family does not exist.
        RouteMismatch: If `check` is enabled and a route disagrees.

    Returns:
        List[List[MultiPoly]]: The rows of the triangle.
    """
    settings = load_settings(config_path, max_n=max_n, format=output_format, check=check)
    entry = lookup_family(name)

    logger.info("Building table of %s up to n = %s", name, settings.max_n)
    rows: List[List[MultiPoly]] = []
    cells: List[List[str]] = []
    documents = []

    for n in range(settings.max_n + 1):
        row: List[MultiPoly] = []
        for k in range(n + 1):
            value = entry["compute"](n, k)
            if settings.check:
                check_routes(name, entry, n, k, value)
            row.append(value)

            shown = value if unify_at is None else unify(value, unify_at)
            cells.append([str(n), str(k), emit_value(shown, "latex" if settings.format == "latex" else "text")])
            documents.append({"n": n, "k": k, "value": json.loads(emit_value(shown, "json"))})
        rows.append(row)

    match settings.format:
        case "json":
            print(json.dumps(documents))
        case "latex":
            print(latex_rows(cells), end="")
        case _:
            pretty_print(["n", "k", name], cells)
    return rows
