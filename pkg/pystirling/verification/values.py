"""
Reference values the suites compare against: the extended Bell matrix around (0, 0) and a set of closed forms.
"""

from math import factorial
from typing import Dict, List, Mapping, Tuple

from pystirling.polyring import PARAM_T, MultiPoly

Term = Tuple[Mapping[int, int], int]


def _poly(*terms: Term) -> MultiPoly:
    return MultiPoly.from_terms(terms)


# Nonzero entries of B(n, k) for -4 <= n, k <= 4.
BELL_EXT_ENTRIES: Dict[Tuple[int, int], MultiPoly] = {
    (-4, -4): _poly(({1: -4}, 1)),
    (-3, -4): _poly(({1: -5, 2: 1}, 6)),
    (-3, -3): _poly(({1: -3}, 1)),
    (-2, -4): _poly(({1: -6, 2: 2}, 15), ({1: -5, 3: 1}, -4)),
    (-2, -3): _poly(({1: -4, 2: 1}, 3)),
    (-2, -2): _poly(({1: -2}, 1)),
    (-1, -4): _poly(({1: -7, 2: 3}, 15), ({1: -6, 2: 1, 3: 1}, -10), ({1: -5, 4: 1}, 1)),
    (-1, -3): _poly(({1: -5, 2: 2}, 3), ({1: -4, 3: 1}, -1)),
    (-1, -2): _poly(({1: -3, 2: 1}, 1)),
    (-1, -1): _poly(({1: -1}, 1)),
    (0, 0): MultiPoly.one(),
    (1, 1): _poly(({1: 1}, 1)),
    (2, 1): _poly(({2: 1}, 1)),
    (2, 2): _poly(({1: 2}, 1)),
    (3, 1): _poly(({3: 1}, 1)),
    (3, 2): _poly(({1: 1, 2: 1}, 3)),
    (3, 3): _poly(({1: 3}, 1)),
    (4, 1): _poly(({4: 1}, 1)),
    (4, 2): _poly(({2: 2}, 3), ({1: 1, 3: 1}, 4)),
    (4, 3): _poly(({1: 2, 2: 1}, 6)),
    (4, 4): _poly(({1: 4}, 1)),
}

BELL_EXT_RADIUS = 4

# B(-3, -5), the entry outside the window which equals A(5, 3).
BELL_EXT_MINUS_3_MINUS_5 = _poly(({1: -7, 2: 2}, 45), ({1: -6, 3: 1}, -10))


def bell_ext_reference() -> List[List[MultiPoly]]:
    """The 9 x 9 matrix of B(n, k), rows n = -4..4 and columns k = -4..4."""
    indices = range(-BELL_EXT_RADIUS, BELL_EXT_RADIUS + 1)
    return [[BELL_EXT_ENTRIES.get((n, k), MultiPoly.zero()) for k in indices] for n in indices]


POTENTIAL_2_2 = _poly(({1: 2}, 2), ({2: 1}, 2))

LAH_SIGNED_ROW_5: Dict[int, MultiPoly] = {
    1: _poly(({1: -8, 2: 4}, -210), ({1: -7, 2: 2, 3: 1}, 120), ({1: -6, 2: 1, 4: 1}, -30)),
    2: _poly(({1: -6, 2: 3}, -270), ({1: -5, 2: 1, 3: 1}, 40), ({1: -4, 4: 1}, -10)),
    3: _poly(({1: -4, 2: 2}, -120)),
    4: _poly(({1: -2, 2: 1}, -20)),
    5: MultiPoly.constant(-1),
}

COMTET_6_2 = _poly(
    ({0: 2, 1: 4}, 31),
    ({0: 3, 1: 2, 2: 1}, 146),
    ({0: 4, 2: 2}, 34),
    ({0: 4, 1: 1, 3: 1}, 57),
    ({0: 5, 4: 1}, 6),
)

# t_n(y) with y carried by the parameter t.
KNUTH_PITTEL_VALUES: Dict[int, MultiPoly] = {
    2: _poly(({PARAM_T: 1}, 3), ({PARAM_T: 2}, 1)),
    3: _poly(({PARAM_T: 1}, 17), ({PARAM_T: 2}, 9), ({PARAM_T: 3}, 1)),
}

LAMBDA_2 = _poly(({1: -3, 2: 1}, -1))


def cycle_leading(n: int) -> MultiPoly:
    """Z(n, 1) = (n-1)! X_n."""
    return _poly(({n: 1}, factorial(n - 1)))


STIRLING2_4_2 = 7
CYCLE_NUMBER_4_2 = 11
PREFERRED_ARRANGEMENTS_3 = 13
