"""
Monomials in the indeterminates X_0, X_1, X_2, ... with integer exponents.
"""

from typing import Dict, Iterator, Mapping, Optional, Tuple

from pystirling.exceptions import InvalidLaurentExponent

# Reserved indices for the parameters of univariate polynomials f_n(t) and bivariate checks in (s, t).
PARAM_T = 1 << 20
PARAM_S = PARAM_T + 1
PARAMETERS = {PARAM_T: "t", PARAM_S: "s"}

LAURENT_INDICES = (0, 1)

Exponents = Tuple[Tuple[int, int], ...]


class Monomial:
    """
    Immutable product X_{j_1}^{e_1} ... X_{j_r}^{e_r} stored as a tuple of `(index, exponent)` pairs in
    ascending index order. Zero exponents are never stored and only X_0 and X_1 may carry negative exponents.
    """

    __slots__ = ("_exponents", "_hash")

    def __init__(self, exponents: Optional[Mapping[int, int]] = None) -> None:
        cleaned: Dict[int, int] = {}

        for index, exponent in (exponents or {}).items():
            if index < 0:
                raise ValueError(f"Variable index must be nonnegative, got {index}")
            if exponent == 0:
                continue
            if exponent < 0 and index not in LAURENT_INDICES:
                raise InvalidLaurentExponent(index, exponent)

            cleaned[index] = exponent

        self._exponents: Exponents = tuple(sorted(cleaned.items()))
        self._hash = hash(self._exponents)

    @classmethod
    def _trusted(cls, exponents: Exponents) -> "Monomial":
        monomial = cls.__new__(cls)
        monomial._exponents = exponents
        monomial._hash = hash(exponents)
        return monomial

    @classmethod
    def var(cls, index: int, exponent: int = 1) -> "Monomial":
        return cls({index: exponent})

    @property
    def exponents(self) -> Exponents:
        return self._exponents

    def as_dict(self) -> Dict[int, int]:
        return dict(self._exponents)

    def exponent(self, index: int) -> int:
        for var_index, exponent in self._exponents:
            if var_index == index:
                return exponent
        return 0

    def variables(self) -> Iterator[int]:
        return (index for index, _ in self._exponents)

    @property
    def degree(self) -> int:
        """Total degree over the X indeterminates. Parameters t and s are not counted."""
        return sum(exponent for index, exponent in self._exponents if index not in PARAMETERS)

    @property
    def weight(self) -> int:
        """Isobaric weight sum of j * e_j over the X indeterminates."""
        return sum(index * exponent for index, exponent in self._exponents if index not in PARAMETERS)

    @property
    def is_one(self) -> bool:
        return not self._exponents

    @property
    def is_unit(self) -> bool:
        return all(index in LAURENT_INDICES for index, _ in self._exponents)

    def has_negative_exponent(self) -> bool:
        return any(exponent < 0 for _, exponent in self._exponents)

    def sort_key(self) -> Tuple:
        """
        Canonical ordering: by weight, then by total degree, then by the exponent vector read from the
        highest index downwards.
        """
        return (self.weight, self.degree, tuple(reversed(self._exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other._exponents:
            return self
        if not self._exponents:
            return other

        merged = dict(self._exponents)
        for index, exponent in other._exponents:
            total = merged.get(index, 0) + exponent
            if total == 0:
                merged.pop(index, None)
            else:
                merged[index] = total

        return Monomial._trusted(tuple(sorted(merged.items())))

    def __pow__(self, power: int) -> "Monomial":
        if power == 0:
            return ONE
        if power < 0 and not self.is_unit:
            offending = next(index for index, _ in self._exponents if index not in LAURENT_INDICES)
            raise InvalidLaurentExponent(offending, power)

        return Monomial._trusted(tuple((index, exponent * power) for index, exponent in self._exponents))

    def without(self, index: int) -> "Monomial":
        return Monomial._trusted(tuple(item for item in self._exponents if item[0] != index))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exponents == other._exponents

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._exponents)

    def __repr__(self) -> str:
        return f"Monomial({dict(self._exponents)})"


ONE = Monomial()
