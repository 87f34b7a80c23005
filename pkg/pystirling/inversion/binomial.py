"""
Sequences of binomial type.

A sequence of polynomials f_0(t), f_1(t), ... is binomial if f_n(s + t) = sum_k C(n, k) f_{n-k}(s) f_k(t). Every
such sequence is generated by an invertible series phi through f_n(t) = sum_k t^k B^phi(n, k)(0), and therefore
equals the exponential polynomial B_n(t f_1'(0), ..., t f_n'(0)). Polynomials in t are plain `MultiPoly` values
over the reserved parameter index `PARAM_T`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from pystirling.exceptions import DomainViolation, NotInvertible
from pystirling.families import (
    bell,
    bell_at,
    binomial,
    complete_bell,
    compose_family,
    factorial_poly,
    logarithmic,
    potential,
    reciprocal_poly,
    stirling1,
    stirling_a,
    tree_poly,
)
from pystirling.logger import logger
from pystirling.polyring import PARAM_S, PARAM_T, X, MultiPoly, Scalar, evaluate, substitute
from pystirling.series import PowerSeries, compose_0case, invert_series
from pystirling.verification.report import VerifyReport

T = X(PARAM_T)

Identity = Tuple[str, str, MultiPoly, MultiPoly]


def rescale(p: MultiPoly, factor: Union[Scalar, MultiPoly]) -> MultiPoly:
    """p(factor * t)."""
    return substitute(p, {PARAM_T: T * factor})


def derivative_at_zero(p: MultiPoly) -> Fraction:
    """p'(0), the coefficient of t."""
    return p.coefficient({PARAM_T: 1})


def falling_in_t(k: int) -> MultiPoly:
    """(t)_k = t(t-1)...(t-k+1)."""
    result = MultiPoly.one()
    for i in range(k):
        result = result * (T - i)
    return result


@dataclass(frozen=True)
class BinomialSeq:
    """
    The polynomials f_0(t), ..., f_N(t) of a sequence together with the series generating them, if known.
    """

    polys: Tuple[MultiPoly, ...]
    phi: Optional[PowerSeries] = None

    def __getitem__(self, n: int) -> MultiPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.polys)

    @property
    def max_n(self) -> int:
        return len(self.polys) - 1

    def slopes(self) -> Dict[int, Fraction]:
        """f_j'(0) for 1 <= j <= N."""
        return {j: derivative_at_zero(self.polys[j]) for j in range(1, len(self.polys))}

    def value_at(self, n: int, point: Scalar) -> Fraction:
        return evaluate(self.polys[n], {PARAM_T: point})


SequenceLike = Union[BinomialSeq, Sequence[MultiPoly]]


def _as_sequence(seq: SequenceLike) -> BinomialSeq:
    if isinstance(seq, BinomialSeq):
        return seq
    return BinomialSeq(tuple(seq))


def binomial_from_phi(phi: PowerSeries, max_n: int) -> BinomialSeq:
    """
    The binomial sequence f_n(t) = [x^n / n!] e^(t phi(x)) = sum_k t^k B^phi(n, k)(0) for n <= max_n.

    Raises:
        NotInvertible: If `phi` is not invertible.
        DomainViolation: If `phi` is truncated below `max_n`.
    """
    if not phi.is_invertible:
        raise NotInvertible("binomial_from_phi")
    if phi.order < max_n:
        raise DomainViolation("binomial_from_phi", f"generator of order {phi.order} is too short for n = {max_n}")

    polys = tuple(
        MultiPoly.from_terms(({PARAM_T: k}, bell_at(phi, n, k)) for k in range(n + 1)) for n in range(max_n + 1)
    )
    return BinomialSeq(polys, phi)


def binomial_generator(seq: SequenceLike) -> PowerSeries:
    """The series sum_j f_j'(0) x^j / j! generating a binomial sequence."""
    seq = _as_sequence(seq)
    slopes = seq.slopes()
    return PowerSeries.from_taylor([0] + [slopes[j] for j in range(1, len(seq))], seq.max_n)


def is_binomial(seq: SequenceLike) -> bool:
    """
    Tests f_0 = 1, f_1'(0) != 0 and f_n(t) = B_n(t f_1'(0), ..., t f_n'(0)) for every polynomial of the sequence.
    """
    seq = _as_sequence(seq)
    if not seq.polys or seq[0] != MultiPoly.one():
        return False
    if any(p.variables() - {PARAM_T} for p in seq):
        return False

    slopes = seq.slopes()
    if len(seq) > 1 and slopes[1] == 0:
        return False

    for n in range(1, len(seq)):
        expected = compose_family(complete_bell(n), lambda j: T * slopes[j])
        if seq[n] != expected:
            logger.debug("Sequence is not binomial at n=%s: %s != %s", n, seq[n], expected)
            return False
    return True


def binomial_convolution_check(seq: SequenceLike) -> bool:
    """
    Direct test of f_n(s + t) = sum_k C(n, k) f_{n-k}(s) f_k(t), independent of the Bell representation.
    """
    seq = _as_sequence(seq)
    s = X(PARAM_S)

    for n, poly in enumerate(seq):
        left = substitute(poly, {PARAM_T: s + T})
        right = MultiPoly.zero()
        for k in range(n + 1):
            right = right + substitute(seq[n - k], {PARAM_T: s}) * seq[k] * binomial(n, k)
        if left != right:
            return False
    return True


def binomial_identities(seq: SequenceLike, max_n: Optional[int] = None) -> Iterator[Identity]:
    """
    Both sides of the substitution identities satisfied by a binomial sequence, as polynomials in t:

        L_n(f_1, ..., f_n) = t f_n'(0)
        P(n, k)(f_1, ..., f_n) = f_n(k t)
        R_n(f_1, ..., f_n) = f_n(-t)
        T_n(f_1, ..., f_n) = f_{n-1}(n t)
        F(n, k)(f_1, ..., f_n) = sum_j s1(k, j) f_n(j t)
        L_n(f_1, ..., f_n) = sum_k (-1)^(k-1) / k C(n, k) f_n(k t)
        B(n, k)(f_1, ...) = 1/k! sum_j (-1)^(k-j) C(k, j) f_n(j t)
        B(n, k)(f_0(t), 2 f_1(t), 3 f_2(t), ...) = C(n, k) f_{n-k}(k t)
        A(n, k)(f_0(t), 2 f_1(t), 3 f_2(t), ...) = C(n-1, k-1) f_{n-k}(-n t)
        B(n, k)(f_0(t), f_1(2t), f_2(3t), ...) = C(n-1, k-1) f_{n-k}(n t)
        A(n, k)(f_0(t), f_1(2t), f_2(3t), ...) = C(n, k) f_{n-k}(-k t)

    Yields:
        Tuple[str, str, MultiPoly, MultiPoly]: Identity name, witness, left-hand side and right-hand side.
    """
    seq = _as_sequence(seq)
    max_n = seq.max_n if max_n is None else min(max_n, seq.max_n)
    slopes = seq.slopes()

    def values(j: int) -> MultiPoly:
        return seq[j]

    def idempotent(j: int) -> MultiPoly:
        return seq[j - 1] * j

    def forest(j: int) -> MultiPoly:
        return rescale(seq[j - 1], j)

    for n in range(1, max_n + 1):
        f_n = seq[n]
        witness = f"n={n}"
        log_n = compose_family(logarithmic(n), values)

        yield "logarithmic", witness, log_n, T * slopes[n]
        yield "reciprocal", witness, compose_family(reciprocal_poly(n), values), rescale(f_n, -1)
        yield "tree", witness, compose_family(tree_poly(n), values), rescale(seq[n - 1], n)

        alternating = MultiPoly.zero()
        for k in range(1, n + 1):
            alternating = alternating + rescale(f_n, k) * Fraction((-1) ** (k - 1) * binomial(n, k), k)
        yield "logarithmic_alternating", witness, log_n, alternating

        for k in range(-2, n + 2):
            witness = f"n={n}, k={k}"
            yield "potential", witness, compose_family(potential(n, k), values), rescale(f_n, k)

        for k in range(n + 2):
            witness = f"n={n}, k={k}"
            expected = MultiPoly.zero()
            for j in range(k + 1):
                expected = expected + rescale(f_n, j) * stirling1(k, j)
            yield "factorial", witness, compose_family(factorial_poly(n, k), values), expected

        for k in range(n + 1):
            witness = f"n={n}, k={k}"
            bertrand = MultiPoly.zero()
            for j in range(k + 1):
                bertrand = bertrand + rescale(f_n, j) * ((-1) ** (k - j) * binomial(k, j))
            yield "bertrand", witness, compose_family(bell(n, k), values), bertrand / factorial(k)

            idempotency = rescale(seq[n - k], k) * binomial(n, k)
            yield "idempotency", witness, compose_family(bell(n, k), idempotent), idempotency

        for k in range(1, n + 1):
            witness = f"n={n}, k={k}"
            lower = seq[n - k]

            companion = rescale(lower, -n) * binomial(n - 1, k - 1)
            yield "forest_companion", witness, compose_family(stirling_a(n, k), idempotent), companion

            planted = rescale(lower, n) * binomial(n - 1, k - 1)
            yield "forest", witness, compose_family(bell(n, k), forest), planted

            orthogonal = rescale(lower, -k) * binomial(n, k)
            yield "forest_orthogonal", witness, compose_family(stirling_a(n, k), forest), orthogonal


def binomial_identity_suite(seq: SequenceLike, max_n: Optional[int] = None) -> VerifyReport:
    """
    Checks every substitution identity of `binomial_identities` for a binomial sequence.
    """
    report = VerifyReport(suite="binomial")
    for name, witness, lhs, rhs in binomial_identities(seq, max_n):
        report.compare(name, witness, lhs, rhs)
    return report


def mullin_rota_connect(f: SequenceLike, g: SequenceLike) -> List[List[Fraction]]:
    """
    Connection coefficients c(n, k) with f_n(t) = sum_k c(n, k) g_k(t). If f is generated by psi and g by phi,
    then c(n, k) = B(n, k)(a_1, a_2, ...) with a_j = D^j(inv(phi) o psi)(0).

    Raises:
        NotInvertible: If one of the sequences is not generated by an invertible series.
    """
    f, g = _as_sequence(f), _as_sequence(g)
    max_n = min(f.max_n, g.max_n)

    psi = binomial_generator(f).truncate(max_n)
    phi = binomial_generator(g).truncate(max_n)
    if max_n == 0:
        return [[Fraction(1)]]
    if not phi.is_invertible or not psi.is_invertible:
        raise NotInvertible("mullin_rota_connect")

    connector = compose_0case(invert_series(phi), psi)
    return [[bell_at(connector, n, k) for k in range(n + 1)] for n in range(max_n + 1)]


def connection_polys(coefficients: Sequence[Sequence[Fraction]]) -> List[MultiPoly]:
    """h_n(t) = sum_k c(n, k) t^k."""
    return [MultiPoly.from_terms(({PARAM_T: k}, value) for k, value in enumerate(row)) for row in coefficients]


def mullin_rota_check(f: SequenceLike, g: SequenceLike) -> bool:
    """
    The connection coefficients reproduce f from g and their row polynomials form a binomial sequence.
    """
    f, g = _as_sequence(f), _as_sequence(g)
    coefficients = mullin_rota_connect(f, g)

    for n, row in enumerate(coefficients):
        combined = MultiPoly.zero()
        for k, value in enumerate(row):
            combined = combined + g[k] * value
        if combined != f[n]:
            logger.debug("Connection coefficients fail to reproduce f_%s", n)
            return False
    return is_binomial(connection_polys(coefficients))


def _constants(a: Sequence[Scalar]) -> Dict[int, Fraction]:
    return {j: Fraction(value) for j, value in enumerate(a, start=1)}


def transfer_sequence(g: SequenceLike, a: Sequence[Scalar]) -> List[MultiPoly]:
    """f_n(t) = sum_k g_k(t) B(n, k)(a_1, ..., a_{n-k+1}), where `a` lists a_1, a_2, ... ."""
    g = _as_sequence(g)
    values = _constants(a)
    transferred: List[MultiPoly] = []

    for n in range(len(g)):
        total = MultiPoly.zero()
        for k in range(n + 1):
            total = total + g[k] * evaluate(bell(n, k), values)
        transferred.append(total)
    return transferred


def recover_sequence(f: SequenceLike, a: Sequence[Scalar]) -> List[MultiPoly]:
    """g_n(t) = sum_k f_k(t) A(n, k)(a_1, ..., a_{n-k+1}), the inverse of `transfer_sequence`."""
    f = _as_sequence(f)
    values = _constants(a)
    if values.get(1, 0) == 0:
        raise DomainViolation("recover_sequence", "a_1 must be nonzero")

    recovered: List[MultiPoly] = []
    for n in range(len(f)):
        total = MultiPoly.zero()
        for k in range(n + 1):
            total = total + f[k] * evaluate(stirling_a(n, k), values)
        recovered.append(total)
    return recovered


def both_or_none_check(g: SequenceLike, a: Sequence[Scalar]) -> bool:
    """
    Transfers `g` through the Bell polynomials at `a` and checks that exactly both or none of the two sequences
    are binomial, and that the A-inversion recovers `g`.

    Raises:
        DomainViolation: If a_1 = 0.
    """
    g = _as_sequence(g)
    if not a or a[0] == 0:
        raise DomainViolation("both_or_none_check", "a_1 must be nonzero")

    f = transfer_sequence(g, a)
    if is_binomial(f) != is_binomial(g):
        return False
    return recover_sequence(f, a) == list(g)


def yang_form(seq: SequenceLike) -> List[MultiPoly]:
    """sum_k (t)_k B(n, k)(f_1(1), ..., f_{n-k+1}(1)) for every n of the sequence."""
    seq = _as_sequence(seq)
    at_one = [seq.value_at(j, 1) for j in range(1, len(seq))]
    return transfer_sequence([falling_in_t(k) for k in range(len(seq))], at_one)


def yang_check(seq: SequenceLike) -> bool:
    """A sequence is binomial if and only if it equals its Yang form."""
    return yang_form(seq) == list(_as_sequence(seq))
