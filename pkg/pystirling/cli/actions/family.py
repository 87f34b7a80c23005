"""
Prints a single entry of a polynomial family.
"""

from fractions import Fraction
from typing import Optional, Union

from pystirling.cli.utils import FamilyEntry, lookup_family, print_poly
from pystirling.exceptions import RouteMismatch
from pystirling.logger import logger
from pystirling.polyring import MultiPoly, emit, unify
from pystirling.settings import load_settings


def check_routes(name: str, entry: FamilyEntry, n: int, k: int, value: MultiPoly) -> None:
    """
    Compares `value` with every independent route registered for the family.

    Raises:
        RouteMismatch: If a route disagrees.
    """
    if not entry["extended"] and not 1 <= k <= n:
        return

    for route_name, route in entry["routes"].items():
        logger.debug("Comparing %s(%s, %s) with route %s", name, n, k, route_name)
        other = route(n, k)
        if other != value:
            raise RouteMismatch(f"{name}.{route_name}({n}, {k})", emit(value), emit(other))


def family(
    name: str,
    n: int,
    k: int,
    config_path: Optional[str] = None,
    output_format: Optional[str] = None,
    unify_at: Optional[Fraction] = None,
    check: Optional[bool] = None,
) -> Union[MultiPoly, Fraction]:
    """
    Computes and prints Q(n, k) for the family `name`.

    Args:
        name(str): Name of the family, for example `bell` or `lah`.
        n(int): Row index.
        k(int): Column index.
        config_path(str, optional): Path to a config file. Defaults to None.
        output_format(str, optional): `text`, `json` or `latex`. Defaults to the configured format.
        unify_at(Fraction, optional): Prints the unification at this value instead of the polynomial.
        check(bool, optional): Whether to compare against every independent route.

    Raises:
        UnknownFamily: If the family does not exist.
        RouteMismatch: If `check` is enabled and a route disagrees.

    Returns:
        Union[MultiPoly, Fraction]: The printed polynomial or its unification.
    """
    settings = load_settings(config_path, format=output_format, check=check)
    entry = lookup_family(name)

    logger.info("Computing %s(%s, %s)", name, n, k)
    value = entry["compute"](n, k)

    if settings.check:
        check_routes(name, entry, n, k, value)

    if unify_at is not None:
        unified = unify(value, unify_at)
        print_poly(unified, settings.format)
        return unified

    print_poly(value, settings.format)
    return value
