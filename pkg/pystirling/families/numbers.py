"""
Stirling numbers obtained by unification of the Bell and Stirling polynomial triangles.
"""

from fractions import Fraction
from typing import List

from pystirling.families.bell import bell, stirling_a
from pystirling.polyring import unify


def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling number of the first kind, A(n, k) at X_j = 1."""
    return unify(stirling_a(n, k), 1)


def stirling2(n: int, k: int) -> Fraction:
    """Stirling number of the second kind, B(n, k) at X_j = 1."""
    return unify(bell(n, k), 1)


def stirling_triangle(kind: int, max_n: int) -> List[List[Fraction]]:
    """
    Rows 0..max_n of the first (`kind=1`) or second (`kind=2`) Stirling triangle.
    """
    match kind:
        case 1:
            entry = stirling1
        case 2:
            entry = stirling2
        case _:
            raise ValueError(f"Stirling numbers of kind {kind} do not exist")

    return [[entry(n, k) for k in range(n + 1)] for n in range(max_n + 1)]
