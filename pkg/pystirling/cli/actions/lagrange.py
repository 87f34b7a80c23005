"""
Prints generalized Lagrange inversion polynomials.
"""

from typing import Optional

from pystirling.cli.utils import named_series, print_poly
from pystirling.exceptions import RouteMismatch
from pystirling.inversion import SeriesForm, lagrange_round_trip, lambda_general
from pystirling.logger import logger
from pystirling.polyring import MultiPoly
from pystirling.settings import load_settings


def lagrange(
    n: int,
    config_path: Optional[str] = None,
    a: str = "one",
    phi: str = "identity",
    b: str = "one",
    psi: str = "identity",
    output_format: Optional[str] = None,
    check: Optional[bool] = None,
) -> MultiPoly:
    """
    Computes Lambda_n(a, phi | b, psi), the n-th constant of inv(f) = b * (d o psi) as a polynomial in the
    constants c_j = X_j of f = a * (c o phi). The case of each form is inferred from a(0) and b(0).

    Args:
        n(int): Index of the constant.
        config_path(str, optional): Path to a config file. Defaults to None.
        a(str): Name of the series a. Defaults to `one`.
        phi(str): Name of the series phi. Defaults to `identity`.
        b(str): Name of the series b. Defaults to `one`.
        psi(str): Name of the series psi. Defaults to `identity`.
        output_format(str, optional): `text`, `json` or `latex`. Defaults to the configured format.
        check(bool, optional): Whether to verify the round trip back to X_1, ..., X_n.

    Raises:
        UnknownFamily: If one of the series names does not exist.
        CompositionCaseViolation: If a or b is neither a unit nor invertible.
        NotInvertible: If phi or psi is not invertible.
        RouteMismatch: If `check` is enabled and the round trip fails.

    Returns:
        MultiPoly: The inversion polynomial.
    """
    settings = load_settings(config_path, format=output_format, check=check)
    # the round trip reads one constant past n
    order = n + 2
    source = SeriesForm.of(named_series(a, order), named_series(phi, order))
    target = SeriesForm.of(named_series(b, order), named_series(psi, order))

    logger.info("Computing Lambda_%s(%s, %s | %s, %s)", n, a, phi, b, psi)
    value = lambda_general(n, source, target)

    if settings.check:
        if not lagrange_round_trip(source, target, n):
            raise RouteMismatch(f"Lambda_{n} round trip", "composition", f"X{n}")

    print_poly(value, settings.format)
    return value
