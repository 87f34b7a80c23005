"""
(n, k)-partition types: sequences r_1, r_2, ... >= 0 with sum r_j = k and sum j * r_j = n.
"""

from functools import lru_cache
from math import factorial, prod
from typing import Iterator, List, NamedTuple, Tuple

from .table import register_cache


class PartitionType(NamedTuple):
    """
    Multiplicities r_1, r_2, ..., r_m of the parts 1, 2, ..., m. Trailing zeros are not stored.
    """

    multiplicities: Tuple[int, ...]

    def r(self, j: int) -> int:
        if 1 <= j <= len(self.multiplicities):
            return self.multiplicities[j - 1]
        return 0

    @property
    def size(self) -> int:
        return sum(j * r for j, r in self.items())

    @property
    def length(self) -> int:
        return sum(self.multiplicities)

    def items(self) -> Iterator[Tuple[int, int]]:
        """Pairs (j, r_j) with r_j > 0."""
        return ((j, r) for j, r in enumerate(self.multiplicities, start=1) if r > 0)

    def set_partition_count(self) -> int:
        """Number of set partitions of an n-set with this block profile, n! / prod(r_j! (j!)^r_j)."""
        return factorial(self.size) // prod(factorial(r) * factorial(j) ** r for j, r in self.items())


def _descending_parts(n: int, k: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return

    for part in range(min(n - k + 1, largest), 0, -1):
        if part * k < n:
            break
        for rest in _descending_parts(n - part, k - 1, part):
            yield (part,) + rest


def _as_type(parts: Tuple[int, ...]) -> PartitionType:
    if not parts:
        return PartitionType(())

    multiplicities = [0] * parts[0]
    for part in parts:
        multiplicities[part - 1] += 1
    return PartitionType(tuple(multiplicities))


@register_cache
@lru_cache(maxsize=1024)
def _partition_types(n: int, k: int) -> Tuple[PartitionType, ...]:
    return tuple(_as_type(parts) for parts in _descending_parts(n, k, n))


def partition_types(n: int, k: int) -> List[PartitionType]:
    """
    All (n, k)-partition types in a deterministic order (parts listed in descending lexicographic order).
    P(0, 0) holds the empty type and P(n, k) is empty whenever no partition of n into k parts exists.

    Args:
        n(int): The isobaric weight, i.e. the integer being partitioned.
        k(int): The number of parts.

    Returns:
        List[PartitionType]: The partition types.
    """
    if n < 0 or k < 0:
        return []
    return list(_partition_types(n, k))
