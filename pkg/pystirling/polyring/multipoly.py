"""
Sparse multivariate Laurent polynomials over the rationals.

Coefficients are `fractions.Fraction` values, so every operation is exact. Values are immutable after
construction and safe to share between threads.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from pystirling.exceptions import (
    DomainViolation,
    NegativePowerOfNonUnit,
    NonInvertibleSubstitution,
    ZeroDenominator,
)
from pystirling.polyring.monomial import ONE, Monomial

Scalar = Union[int, Fraction]
PolyLike = Union["MultiPoly", int, Fraction]


def _accumulate(target: Dict[Monomial, Fraction], monomial: Monomial, coeff: Fraction) -> None:
    total = target.get(monomial, 0) + coeff
    if total == 0:
        target.pop(monomial, None)
    else:
        target[monomial] = total


class MultiPoly:
    """
    Finite mapping from `Monomial` to nonzero `Fraction`. Equality is structural on the term set, the zero
    polynomial has no terms.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None) -> None:
        self._terms: Dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            if coeff != 0:
                _accumulate(self._terms, monomial, Fraction(coeff))
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, terms: Dict[Monomial, Fraction]) -> "MultiPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._trusted({})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls._trusted({ONE: Fraction(1)})

    @classmethod
    def constant(cls, value: Scalar) -> "MultiPoly":
        if value == 0:
            return cls.zero()
        return cls._trusted({ONE: Fraction(value)})

    @classmethod
    def var(cls, index: int, exponent: int = 1, coeff: Scalar = 1) -> "MultiPoly":
        return cls.monomial(Monomial.var(index, exponent), coeff)

    @classmethod
    def monomial(cls, monomial: Monomial, coeff: Scalar = 1) -> "MultiPoly":
        if coeff == 0:
            return cls.zero()
        return cls._trusted({monomial: Fraction(coeff)})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Mapping[int, int], Scalar]]) -> "MultiPoly":
        collected: Dict[Monomial, Fraction] = {}
        for exponents, coeff in terms:
            if coeff != 0:
                _accumulate(collected, Monomial(exponents), Fraction(coeff))
        return cls._trusted(collected)

    @classmethod
    def coerce(cls, value: PolyLike) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"Can not interpret {value!r} as a polynomial")

    def items(self) -> Iterable[Tuple[Monomial, Fraction]]:
        return self._terms.items()

    def terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda term: term[0].sort_key())

    def coefficient(self, monomial: Union[Monomial, Mapping[int, int]]) -> Fraction:
        if not isinstance(monomial, Monomial):
            monomial = Monomial(monomial)
        return self._terms.get(monomial, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get(ONE, Fraction(0))

    def variables(self) -> Set[int]:
        return {index for monomial in self._terms for index in monomial.variables()}

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(monomial.is_one for monomial in self._terms)

    @property
    def is_unit(self) -> bool:
        """A single term whose indeterminates are among X_0 and X_1, including nonzero scalars."""
        return len(self._terms) == 1 and next(iter(self._terms)).is_unit

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: PolyLike) -> "MultiPoly":
        other_poly = _maybe_coerce(other)
        if other_poly is None:
            return NotImplemented

        terms = dict(self._terms)
        for monomial, coeff in other_poly._terms.items():
            _accumulate(terms, monomial, coeff)
        return MultiPoly._trusted(terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._trusted({monomial: -coeff for monomial, coeff in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "MultiPoly":
        other_poly = _maybe_coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: PolyLike) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly.zero()
            return MultiPoly._trusted({monomial: coeff * other for monomial, coeff in self._terms.items()})

        other_poly = _maybe_coerce(other)
        if other_poly is None:
            return NotImplemented

        terms: Dict[Monomial, Fraction] = {}
        for left_monomial, left_coeff in self._terms.items():
            for right_monomial, right_coeff in other_poly._terms.items():
                _accumulate(terms, left_monomial * right_monomial, left_coeff * right_coeff)
        return MultiPoly._trusted(terms)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "MultiPoly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, power: int) -> "MultiPoly":
        if power < 0:
            if len(self._terms) != 1:
                raise NegativePowerOfNonUnit(len(self._terms), power)

            ((monomial, coeff),) = self._terms.items()
            return MultiPoly._trusted({monomial**power: coeff**power})

        result = MultiPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        # pylint: disable=import-outside-toplevel
        from pystirling.polyring.serialization import to_text

        return to_text(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _maybe_coerce(value: object) -> Optional[MultiPoly]:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.constant(value)
    return None


X = MultiPoly.var


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_pow(p: MultiPoly, k: int) -> MultiPoly:
    """
    Raises `p` to the integer power `k`.

    Raises:
        NegativePowerOfNonUnit: If `k` is negative and `p` does not consist of exactly one term.
    """
    return p**k


def partial_derivative(p: MultiPoly, index: int) -> MultiPoly:
    """
    Formal partial derivative with respect to X_index. Negative exponents follow the power rule.
    """
    terms: Dict[Monomial, Fraction] = {}

    for monomial, coeff in p.items():
        exponent = monomial.exponent(index)
        if exponent == 0:
            continue

        exponents = monomial.as_dict()
        exponents[index] = exponent - 1
        _accumulate(terms, Monomial(exponents), coeff * exponent)

    return MultiPoly._trusted(terms)


def substitute(p: MultiPoly, assignment: Mapping[int, PolyLike]) -> MultiPoly:
    """
    Simultaneous substitution X_j -> assignment[j]. Indeterminates absent from the assignment stay fixed.

    Args:
        p(MultiPoly): The polynomial to substitute into.
        assignment(Mapping[int, PolyLike]): Images of the substituted indeterminates.

    Raises:
        NonInvertibleSubstitution: If an indeterminate with a negative exponent is assigned a non-unit.

    Returns:
        MultiPoly: The substituted polynomial.
    """
    images = {index: MultiPoly.coerce(value) for index, value in assignment.items()}
    powers: Dict[Tuple[int, int], MultiPoly] = {}
    result: Dict[Monomial, Fraction] = {}

    def image_power(index: int, exponent: int) -> MultiPoly:
        key = (index, exponent)
        if key not in powers:
            image = images[index]
            if exponent < 0 and not image.is_unit:
                raise NonInvertibleSubstitution(index)
            powers[key] = image**exponent
        return powers[key]

    for monomial, coeff in p.items():
        kept: List[Tuple[int, int]] = []
        product = MultiPoly.constant(coeff)

        for index, exponent in monomial:
            if index in images:
                product = product * image_power(index, exponent)
                if product.is_zero:
                    break
            else:
                kept.append((index, exponent))

        if product.is_zero:
            continue

        fixed = Monomial._trusted(tuple(kept))  # pylint: disable=protected-access
        for image_monomial, image_coeff in product.items():
            _accumulate(result, image_monomial * fixed, image_coeff)

    return MultiPoly._trusted(result)  # pylint: disable=protected-access


def evaluate(p: MultiPoly, values: Mapping[int, Scalar]) -> Fraction:
    """
    Evaluates `p` at rational values for every indeterminate it contains.

    Raises:
        DomainViolation: If an indeterminate of `p` has no value.
        ZeroDenominator: If an indeterminate with a negative exponent is evaluated at zero.
    """
    total = Fraction(0)

    for monomial, coeff in p.items():
        value = coeff
        for index, exponent in monomial:
            if index not in values:
                raise DomainViolation("evaluate", f"no value given for X{index}")

            base = Fraction(values[index])
            if base == 0 and exponent < 0:
                raise ZeroDenominator(index)
            value *= base**exponent
        total += value

    return total


def unify(p: MultiPoly, value: Scalar) -> Fraction:
    """
    Unification: every indeterminate is replaced by the same rational value.

    Raises:
        ZeroDenominator: If `value` is zero and `p` contains a negative exponent.
    """
    value = Fraction(value)
    total = Fraction(0)

    for monomial, coeff in p.items():
        if value == 0:
            if monomial.has_negative_exponent():
                offending = next(index for index, exponent in monomial if exponent < 0)
                raise ZeroDenominator(offending)
            if monomial.is_one:
                total += coeff
            continue

        total += coeff * value ** sum(exponent for _, exponent in monomial)

    return total


def grading(p: MultiPoly, x1_shift: Optional[int] = None) -> Tuple[Optional[int], Optional[int]]:
    """
    Homogeneous degree and isobaric weight of `X_1^x1_shift * p`. A slot is `None` if the terms disagree.
    The zero polynomial has neither.

    Without an explicit shift, a Laurent polynomial of uniform degree `-n < 0` with `X_1` in the denominator is
    graded through its numerator `X_1^(2n-1) * p`, the normal form of the `A(n, k)` triangle. Pass `x1_shift=0`
    for the raw grading.
    """
    if x1_shift is None:
        x1_shift = 0
        raw_degrees = {monomial.degree for monomial, _ in p.items()}
        if (
            len(raw_degrees) == 1
            and next(iter(raw_degrees)) < 0
            and any(monomial.exponent(1) < 0 for monomial, _ in p.items())
        ):
            x1_shift = -2 * next(iter(raw_degrees)) - 1

    degrees = {monomial.degree + x1_shift for monomial, _ in p.items()}
    weights = {monomial.weight + x1_shift for monomial, _ in p.items()}

    return (
        degrees.pop() if len(degrees) == 1 else None,
        weights.pop() if len(weights) == 1 else None,
    )
