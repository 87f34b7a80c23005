"""
Runs a named verification suite and prints its report.
"""

from typing import Any, Dict, Optional

from pystirling.cli.utils import print_report
from pystirling.logger import logger
from pystirling.pydantic_utils import parse_model
from pystirling.settings import load_settings
from pystirling.verification import VerifyReport
from pystirling.verification.suites import SuiteOptions, run_suite


def verify(
    suite: str,
    config_path: Optional[str] = None,
    max_n: Optional[int] = None,
    radius: Optional[int] = None,
    degree: Optional[int] = None,
    m: Optional[int] = None,
    k: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    output_format: Optional[str] = None,
) -> VerifyReport:
    """
    Runs a verification suite. The command exits with code 1 if any check fails.

    Args:
        suite(str): Name of the suite or `all`.
        config_path(str, optional): Path to a config file. Defaults to None.
        max_n(int, optional): Largest row index. Defaults to the configured `max_n`.
        radius(int, optional): Index window -radius..radius of the reciprocity suites.
        degree(int, optional): Degree of the Melzak polynomial.
        m(int, optional): Backward shifts of the Melzak formula.
        k(int, optional): Forward shift of the Melzak formula.
        seed(int, optional): Seed of the randomized suites. Defaults to the configured seed.
        workers(int, optional): Threads used by `all`. Defaults to the configured number.
        output_format(str, optional): `text` or `json`, LaTeX falls back to text.

    Raises:
        UnknownSuite: If the suite does not exist.

    Returns:
        VerifyReport: The report of the suite.
    """
    settings = load_settings(config_path, seed=seed, max_n=max_n, workers=workers, format=output_format)

    data: Dict[str, Any] = {"max_n": settings.max_n, "seed": settings.seed, "workers": settings.workers}
    optional = {"radius": radius, "degree": degree, "m": m, "k": k}
    data.update({key: value for key, value in optional.items() if value is not None})
    options = parse_model(SuiteOptions, data)

    report = run_suite(suite, options)
    if not report.passed:
        logger.error("Suite %s failed %s of %s checks", report.suite, len(report.failures), report.checks)

    print_report(report, "json" if settings.format == "json" else "text")
    return report
