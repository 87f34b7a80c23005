"""
Prints the compositional inverse of a power series.
"""

import random
from typing import Optional

from pystirling.cli.utils import named_series, series_text
from pystirling.logger import logger
from pystirling.series import PowerSeries, invert_series, load_series, random_series
from pystirling.settings import load_settings

DEFAULT_ORDER = 8


def invert(
    config_path: Optional[str] = None,
    series_path: Optional[str] = None,
    generator: Optional[str] = None,
    order: Optional[int] = None,
    seed: Optional[int] = None,
    output_format: Optional[str] = None,
    check: Optional[bool] = None,
) -> PowerSeries:
    """
    Inverts a series read from a JSON document, a named series or, with `generator=random`, a seeded random
    invertible series.

    Args:
        config_path(str, optional): Path to a config file. Defaults to None.
        series_path(str, optional): Path to a series document `{"order": N, "taylor": [...]}`.
        generator(str, optional): Name of a series, used when no document is given. Defaults to `logm`.
        order(int, optional): Truncation order of named and random series. Defaults to 8.
        seed(int, optional): Seed for `random`. Defaults to the configured seed.
        output_format(str, optional): `text`, `json` or `latex`. Defaults to the configured format.
        check(bool, optional): Whether to compute the inverse by both routes.

    Raises:
        InvalidSeriesDocument: If the document can not be read.
        NotInvertible: If the series has no compositional inverse.
        RouteMismatch: If `check` is enabled and both routes disagree.

    Returns:
        PowerSeries: The inverse.
    """
    settings = load_settings(config_path, seed=seed, format=output_format, check=check)
    order = DEFAULT_ORDER if order is None else order

    if series_path is not None:
        f = load_series(series_path)
    elif generator == "random":
        f = random_series(random.Random(settings.seed), order, "invertible")
    else:
        f = named_series(generator or "logm", order)

    logger.info("Inverting a series of order %s", f.order)
    inverse = invert_series(f, check=settings.check)
    print(series_text(inverse, settings.format))
    return inverse
