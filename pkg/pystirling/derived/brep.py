"""
B-representable families Q(n, k) = B(n, k)(H_1, ..., H_{n-k+1}) and their orthogonal companions.
"""

import threading
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from pystirling.exceptions import DomainViolation, NotRegular
from pystirling.families import FamilyId, FamilyTable, bell, binomial, compose_family, stirling_a
from pystirling.logger import logger
from pystirling.polyring import X, MultiPoly, poly_pow

Generator = Callable[[int], MultiPoly]
Triangle = Callable[[int, int], MultiPoly]

# The first row in which interior unknowns H_2, ..., H_{n-1} enter the Bell equations.
FIRST_INTERIOR_ROW = 3


class BRepFamily:
    """
    Triangle generated by a lazily extended sequence H_1, H_2, ... through the partial Bell polynomials.
    Entries are memoized in a `FamilyTable`, generator values in a lock protected dictionary.
    """

    def __init__(self, generator: Generator, name: str = FamilyId.GENERATED.value) -> None:
        self.name = name
        self._generator = generator
        self._values: Dict[int, MultiPoly] = {}
        self._lock = threading.Lock()
        self.table = FamilyTable(FamilyId.GENERATED, self._compute)

    def h(self, j: int) -> MultiPoly:
        """The generator H_j, equal to Q(j, 1)."""
        with self._lock:
            cached = self._values.get(j)
        if cached is not None:
            return cached

        value = self._generator(j)
        with self._lock:
            return self._values.setdefault(j, value)

    def _compute(self, n: int, k: int) -> MultiPoly:
        return compose_family(bell(n, k), self.h)

    def entry(self, n: int, k: int) -> MultiPoly:
        if n < 0 or k < 0 or k > n:
            return MultiPoly.zero()
        return self.table.get(n, k)

    __call__ = entry

    @property
    def leading(self) -> MultiPoly:
        return self.h(1)

    @property
    def is_regular(self) -> bool:
        """Q(1, 1) is a nonzero unit of the Laurent polynomial ring."""
        leading = self.leading
        return not leading.is_zero and leading.is_unit

    def orthogonal(self) -> "BRepFamily":
        """
        The companion family with generator A(j, 1)(H_1, ..., H_j), so that its entries are A(n, k)(H_1, ...).

        Raises:
            NotRegular: If Q(1, 1) is zero or not a unit.
        """
        if not self.is_regular:
            raise NotRegular(self.leading)
        return BRepFamily(lambda j: compose_family(stirling_a(j, 1), self.h), f"ortho-{self.name}")

    def __repr__(self) -> str:
        return f"BRepFamily({self.name})"


def brep_from_generator(generator: Union[Generator, Sequence[MultiPoly]], name: str = "generated") -> BRepFamily:
    """
    Builds a B-representable family from a callable j -> H_j or from a finite sequence H_1, H_2, ... .
    """
    if callable(generator):
        return BRepFamily(generator, name)

    values = list(generator)

    def from_sequence(j: int) -> MultiPoly:
        if not 1 <= j <= len(values):
            raise DomainViolation("brep_from_generator", f"generator sequence has no entry H_{j}")
        return values[j - 1]

    return BRepFamily(from_sequence, name)


def brep_orthogonal(family: BRepFamily) -> BRepFamily:
    return family.orthogonal()


def brep_recurrence_witness(triangle: Triangle, max_n: int) -> Optional[Tuple[int, int]]:
    """
    First (n, k) violating Q(n, k) = sum_j C(n-1, j-1) Q(j, 1) Q(n-j, k-1), scanning rows 1..max_n from the
    diagonal outwards, or None if the recurrence holds throughout.
    """
    for n in range(1, max_n + 1):
        for k in range(n, 0, -1):
            expected = MultiPoly.zero()
            for j in range(1, n - k + 2):
                expected = expected + triangle(j, 1) * triangle(n - j, k - 1) * binomial(n - 1, j - 1)

            if triangle(n, k) != expected:
                logger.debug("Binomial recurrence fails at (%s, %s)", n, k)
                return (n, k)
    return None


def brep_check_recurrence(triangle: Triangle, max_n: int) -> bool:
    """True iff the binomial recurrence of B-representable families holds up to row max_n."""
    return brep_recurrence_witness(triangle, max_n) is None


def solve_bell_row(row: Sequence[MultiPoly], h1: MultiPoly) -> List[MultiPoly]:
    """
    Solves the single row B(n, k)(H_1, ..., H_{n-k+1}) = row[k-1], 1 <= k <= n, for H_1, ..., H_n with a given
    choice of H_1. The unknowns H_2, ..., H_{n-1} enter linearly with coefficient C(n, k-1) H_1^(k-1).

    Raises:
        DomainViolation: If H_1^n differs from the diagonal entry or H_1 is not a unit.
    """
    n = len(row)
    if n == 0:
        return []
    if poly_pow(h1, n) != row[n - 1]:
        raise DomainViolation("solve_bell_row", f"H_1^{n} does not match the diagonal entry {row[n - 1]}")
    if n > 1 and not h1.is_unit:
        raise DomainViolation("solve_bell_row", "H_1 must be a unit")

    solution: List[MultiPoly] = [h1]
    for j in range(2, n):
        k = n - j + 1
        partial = dict(enumerate(solution, start=1))
        partial[j] = MultiPoly.zero()
        remainder = row[k - 1] - compose_family(bell(n, k), partial.__getitem__)
        solution.append(remainder * poly_pow(h1, -(k - 1)) / binomial(n, k - 1))

    if n > 1:
        solution.append(row[0])
    return solution


def bell_equations_witness(
    triangle: Triangle, max_n: int, start: int = FIRST_INTERIOR_ROW, h1: Optional[MultiPoly] = None
) -> Optional[int]:
    """
    Solves row `start` of the triangle and carries the solution forward row by row. Returns the first row n
    whose equations for 2 <= k <= n are violated by the carried H_1, ..., H_{n-1}, or None if the solution
    extends up to max_n.

    Args:
        triangle(Triangle): The triangle Q(n, k).
        max_n(int): The last row to test.
        start(int): The row whose solution is carried forward. Defaults to the first row with interior unknowns.
        h1(Optional[MultiPoly]): The choice of H_1. Defaults to Q(1, 1).
    """
    h1 = triangle(1, 1) if h1 is None else h1
    solution = solve_bell_row([triangle(start, k) for k in range(1, start + 1)], h1)

    for n in range(start + 1, max_n + 1):
        carried = dict(enumerate(solution, start=1))
        carried[n] = triangle(n, 1)

        for k in range(2, n + 1):
            if compose_family(bell(n, k), carried.__getitem__) != triangle(n, k):
                logger.debug("Bell equations of row %s are not solved by row %s at k=%s", n, n - 1, k)
                return n

        solution = [carried[j] for j in range(1, n + 1)]
    return None


def constant_triangle(n: int, k: int) -> MultiPoly:
    """The triangle with all entries 1 for 1 <= k <= n, used as a negative example."""
    if n == 0 and k == 0:
        return MultiPoly.one()
    return MultiPoly.one() if 1 <= k <= n else MultiPoly.zero()


def bell_generator(j: int) -> MultiPoly:
    return X(j)
