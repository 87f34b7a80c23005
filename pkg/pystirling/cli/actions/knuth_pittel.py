"""
Prints the Knuth-Pittel polynomials t_n(y).
"""

from typing import Optional

from pystirling.cli.utils import print_poly
from pystirling.exceptions import RouteMismatch
from pystirling.inversion import knuth_pittel as knuth_pittel_poly
from pystirling.inversion import knuth_pittel_via_bell, knuth_pittel_via_series
from pystirling.logger import logger
from pystirling.polyring import MultiPoly, emit
from pystirling.settings import load_settings


def knuth_pittel(
    n: int,
    config_path: Optional[str] = None,
    output_format: Optional[str] = None,
    check: Optional[bool] = None,
) -> MultiPoly:
    """
    Computes t_n(y), printed as a polynomial in `t`.

    Args:
        n(int): Index of the polynomial.
        config_path(str, optional): Path to a config file. Defaults to None.
        output_format(str, optional): `text`, `json` or `latex`. Defaults to the configured format.
        check(bool, optional): Whether to compare the explicit sum with the series and Bell routes.

    Raises:
        RouteMismatch: If `check` is enabled and a route disagrees.

    Returns:
        MultiPoly: t_n.
    """
    settings = load_settings(config_path, format=output_format, check=check)

    logger.info("Computing t_%s", n)
    value = knuth_pittel_poly(n)

    if settings.check:
        for route_name, route in (("series", knuth_pittel_via_series), ("bell", knuth_pittel_via_bell)):
            other = route(n)
            if other != value:
                raise RouteMismatch(f"t_{n}.{route_name}", emit(value), emit(other))

    print_poly(value, settings.format)
    return value
