"""
Knuth-Pittel tree polynomials t_n(y) = [x^n / n!] (1 - tau(x))^(-y), where tau is the exponential generating function
of labeled rooted trees. The coefficient t(n, k) counts the mappings of {1, ..., n} into itself with exactly k
cycles. The variable y is carried by the parameter index `PARAM_T`.
"""

from fractions import Fraction
from math import factorial
from typing import List

from pystirling.families import binomial, complete_bell, compose_family, stirling1
from pystirling.inversion.binomial import T, BinomialSeq, binomial_from_phi
from pystirling.polyring import PARAM_T, MultiPoly
from pystirling.series import PowerSeries, compose_0case, geometric, logm


def tree_function(order: int) -> PowerSeries:
    """tau(x) = sum_{n>=1} n^(n-1) x^n / n!, built from its closed coefficients."""
    return PowerSeries.from_taylor([0] + [n ** (n - 1) for n in range(1, order + 1)], order)


def knuth_pittel_generator(order: int) -> PowerSeries:
    """phi = logm o g o tau with g(x) = x / (1 - x), so that e^(y phi) = (1 - tau)^(-y)."""
    return compose_0case(logm(order), compose_0case(geometric(order), tree_function(order)))


def knuth_pittel_coefficient(n: int, k: int) -> Fraction:
    """
    t(n, k) = sum_{k <= j <= i <= n} s1(j, k) n^(n-i) i!/j! C(i-1, j-1) C(n-1, i-1).
    """
    if n == 0:
        return Fraction(1 if k == 0 else 0)
    if k < 0 or k > n:
        return Fraction(0)

    total = Fraction(0)
    for j in range(k, n + 1):
        cycles = stirling1(j, k)
        if cycles == 0:
            continue
        for i in range(j, n + 1):
            weight = Fraction(n ** (n - i) * factorial(i), factorial(j))
            total += cycles * weight * binomial(i - 1, j - 1) * binomial(n - 1, i - 1)
    return total


def knuth_pittel(n: int) -> MultiPoly:
    """t_n(y) from the explicit double sum."""
    return MultiPoly.from_terms(({PARAM_T: k}, knuth_pittel_coefficient(n, k)) for k in range(n + 1))


def knuth_pittel_coefficients(n: int) -> List[Fraction]:
    return [knuth_pittel_coefficient(n, k) for k in range(n + 1)]


def knuth_pittel_via_series(n: int) -> MultiPoly:
    """t_n(y) = sum_k B^phi(n, k)(0) y^k for the generator phi = logm o g o tau."""
    return binomial_from_phi(knuth_pittel_generator(max(n, 1)), n)[n]


def single_cycle_count(r: int) -> Fraction:
    """
    t(r, 1) = sum_{1 <= j <= i <= r} (-1)^(j-1) r^(r-i) i!/j C(i-1, j-1) C(r-1, i-1), the mappings with one cycle.
    """
    total = Fraction(0)
    for j in range(1, r + 1):
        for i in range(j, r + 1):
            weight = Fraction((-1) ** (j - 1) * r ** (r - i) * factorial(i), j)
            total += weight * binomial(i - 1, j - 1) * binomial(r - 1, i - 1)
    return total


def knuth_pittel_via_bell(n: int) -> MultiPoly:
    """t_n(y) = B_n(y t(1, 1), ..., y t(n, 1))."""
    return compose_family(complete_bell(n), lambda j: T * single_cycle_count(j))


def knuth_pittel_sequence(max_n: int) -> BinomialSeq:
    """t_0(y), ..., t_N(y) as a binomial sequence with its generator."""
    return binomial_from_phi(knuth_pittel_generator(max(max_n, 1)), max_n)
