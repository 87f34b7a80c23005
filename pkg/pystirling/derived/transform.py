"""
Generalized Stirling inversion: U_n = sum_k Q(n, k) V_k if and only if V_n = sum_k ortho-Q(n, k) U_k.
"""

from typing import List, Sequence

from pystirling.derived.brep import BRepFamily, Triangle
from pystirling.polyring import MultiPoly


def stirling_transform(triangle: Triangle, values: Sequence[MultiPoly]) -> List[MultiPoly]:
    """U_n = sum_{k=0}^n Q(n, k) V_k for every index of `values`."""
    transformed: List[MultiPoly] = []
    for n in range(len(values)):
        total = MultiPoly.zero()
        for k in range(n + 1):
            total = total + triangle(n, k) * values[k]
        transformed.append(total)
    return transformed


def generalized_stirling_inversion(
    family: BRepFamily, values: Sequence[MultiPoly], inverse: bool = False
) -> List[MultiPoly]:
    """
    Applies the family (or, with `inverse=True`, its orthogonal companion) to a sequence.

    Raises:
        NotRegular: If the companion is requested for a family which is not regular.
    """
    triangle = family.orthogonal() if inverse else family
    return stirling_transform(triangle, values)


def stirling_inversion_round_trip(family: BRepFamily, values: Sequence[MultiPoly]) -> bool:
    """Transforming with the family and then with its companion returns the original sequence."""
    forward = generalized_stirling_inversion(family, values)
    return generalized_stirling_inversion(family, forward, inverse=True) == list(values)
