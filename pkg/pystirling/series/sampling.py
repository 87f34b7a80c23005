"""
Deterministic seeded generator for random series used by the property suites.
"""

import random
from fractions import Fraction
from typing import List

from typing_extensions import Literal

from pystirling.exceptions import DomainViolation
from pystirling.series.power_series import PowerSeries

SeriesKind = Literal["any", "f0", "unit", "invertible"]

NUMERATOR_RANGE = (-5, 5)
DENOMINATORS = (1, 2, 3)


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(*NUMERATOR_RANGE), rng.choice(DENOMINATORS))
        if value != 0 or not nonzero:
            return value


def random_series(rng: random.Random, order: int, kind: SeriesKind = "any") -> PowerSeries:
    """
    Random series with coefficients in {p/q : -5 <= p <= 5, q in {1, 2, 3}}.

    Args:
        rng(random.Random): Seeded generator.
        order(int): Truncation order.
        kind(SeriesKind): `f0` forces c_0 = 0, `unit` forces c_0 != 0 and `invertible` forces c_0 = 0, c_1 != 0.

    Raises:
        DomainViolation: If the order is negative, or below 1 for an invertible series.
    """
    if order < 0:
        raise DomainViolation("random_series", f"order must be >= 0, got {order}")
    if kind == "invertible" and order < 1:
        raise DomainViolation("random_series", f"an invertible series needs order >= 1, got {order}")

    coeffs: List[Fraction] = [random_rational(rng) for _ in range(order + 1)]

    match kind:
        case "f0":
            coeffs[0] = Fraction(0)
        case "unit":
            coeffs[0] = random_rational(rng, nonzero=True)
        case "invertible":
            coeffs[0] = Fraction(0)
            coeffs[1] = random_rational(rng, nonzero=True)

    return PowerSeries(coeffs, order)


def random_sequence(rng: random.Random, length: int, nonzero_first: bool = False) -> List[Fraction]:
    values = [random_rational(rng) for _ in range(length)]
    if nonzero_first and values:
        values[0] = random_rational(rng, nonzero=True)
    return values
