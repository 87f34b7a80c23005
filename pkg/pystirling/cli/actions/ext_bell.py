"""
Prints entries of the Bell polynomials extended to integer indices.
"""

import json
from typing import List, Optional, Union

from pystirling.cli.actions.family import check_routes
from pystirling.cli.utils import emit_value, latex_rows, lookup_family, pretty_print
from pystirling.extended import MATRIX_RADIUS, bell_ext_matrix
from pystirling.logger import logger
from pystirling.polyring import MultiPoly
from pystirling.settings import load_settings


def ext_bell(
    config_path: Optional[str] = None,
    n: Optional[int] = None,
    k: Optional[int] = None,
    radius: Optional[int] = None,
    output_format: Optional[str] = None,
    check: Optional[bool] = None,
) -> Union[MultiPoly, List[List[MultiPoly]]]:
    """
    Prints B(n, k) for integers n and k, or without `n` and `k` the matrix for -radius <= n, k <= radius.

    Args:
        config_path(str, optional): Path to a config file. Defaults to None.
        n(int, optional): Row index.
        k(int, optional): Column index.
        radius(int, optional): Radius of the matrix. Defaults to 4.
        output_format(str, optional): `text`, `json` or `latex`. Defaults to the configured format.
        check(bool, optional): Whether to compare against the reciprocity route.

    Raises:
        RouteMismatch: If `check` is enabled and the reciprocity route disagrees.

    Returns:
        Union[MultiPoly, List[List[MultiPoly]]]: The entry or the matrix.
    """
    settings = load_settings(config_path, format=output_format, check=check)
    entry = lookup_family("ext-bell")

    if n is not None and k is not None:
        logger.info("Computing extended B(%s, %s)", n, k)
        value = entry["compute"](n, k)
        if settings.check:
            check_routes("ext-bell", entry, n, k, value)
        print(emit_value(value, settings.format))
        return value

    radius = MATRIX_RADIUS if radius is None else radius
    logger.info("Building the extended Bell matrix of radius %s", radius)
    matrix = bell_ext_matrix(radius)
    indices = list(range(-radius, radius + 1))

    if settings.check:
        for row, n_index in zip(matrix, indices):
            for value, k_index in zip(row, indices):
                check_routes("ext-bell", entry, n_index, k_index, value)

    style = "latex" if settings.format == "latex" else "text"
    cells = [[str(n_index)] + [emit_value(value, style) for value in row] for row, n_index in zip(matrix, indices)]

    match settings.format:
        case "json":
            print(json.dumps([[json.loads(emit_value(value, "json")) for value in row] for row in matrix]))
        case "latex":
            print(latex_rows(cells), end="")
        case _:
            pretty_print(["n \\ k"] + [str(k_index) for k_index in indices], cells)
    return matrix
