"""
Prints the binomial sequence generated by a series.
"""

import json
import random
from typing import Optional, Union

from pystirling.cli.utils import emit_value, latex_rows, named_series, pretty_print, print_report
from pystirling.inversion import BinomialSeq, binomial_from_phi, binomial_identity_suite
from pystirling.logger import logger
from pystirling.series import random_series
from pystirling.settings import load_settings
from pystirling.verification import VerifyReport


def binomial(
    config_path: Optional[str] = None,
    phi: str = "logm",
    max_n: Optional[int] = None,
    seed: Optional[int] = None,
    output_format: Optional[str] = None,
    check: Optional[bool] = None,
) -> Union[BinomialSeq, VerifyReport]:
    """
    Prints f_0(t), ..., f_N(t) with e^(t phi(x)) = sum_n f_n(t) x^n / n!.

    Args:
        config_path(str, optional): Path to a config file. Defaults to None.
        phi(str): Name of the generating series or `random`. Defaults to `logm`.
        max_n(int, optional): Last polynomial. Defaults to the configured `max_n`.
        seed(int, optional): Seed for `random`. Defaults to the configured seed.
        output_format(str, optional): `text`, `json` or `latex`. Defaults to the configured format.
        check(bool, optional): Whether to run every binomial identity on the sequence.

    Raises:
        UnknownFamily: If the series name does not exist.
        NotInvertible: If the series is not invertible.

    Returns:
        Union[BinomialSeq, VerifyReport]: The sequence, or the identity report if `check` is enabled.
    """
    settings = load_settings(config_path, seed=seed, max_n=max_n, format=output_format, check=check)
    order = max(settings.max_n, 1)

    if phi == "random":
        generator = random_series(random.Random(settings.seed), order, "invertible")
    else:
        generator = named_series(phi, order)

    logger.info("Building the binomial sequence of %s up to n = %s", phi, settings.max_n)
    seq = binomial_from_phi(generator, settings.max_n)

    match settings.format:
        case "json":
            print(json.dumps([json.loads(emit_value(poly, "json")) for poly in seq]))
        case "latex":
            print(latex_rows([[str(n), emit_value(poly, "latex")] for n, poly in enumerate(seq)]), end="")
        case _:
            pretty_print(["n", "f_n(t)"], [[str(n), emit_value(poly, "text")] for n, poly in enumerate(seq)])

    if settings.check:
        report = binomial_identity_suite(seq)
        print_report(report, "text" if settings.format == "latex" else settings.format)
        return report
    return seq
