"""
Integer helpers shared by the polynomial families: falling powers, binomial coefficients with an arbitrary
integer upper index and the Kronecker delta.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Union

from .table import register_cache

Scalar = Union[int, Fraction]


def falling(x: Scalar, j: int) -> Scalar:
    """
    Falling power (x)_j = x(x-1)...(x-j+1) with (x)_0 = 1. Works for any rational `x`, including negative
    integers as needed by P(n, k) with k < 0. Negative lengths follow (x)_{-m} = 1 / ((x+1)(x+2)...(x+m)).
    """
    if j < 0:
        denominator: Scalar = 1
        for i in range(1, -j + 1):
            denominator *= x + i
        return Fraction(1) / denominator

    result: Scalar = 1
    for i in range(j):
        result *= x - i
    return result


def rising(x: Scalar, j: int) -> Scalar:
    return falling(x + j - 1, j)


@register_cache
@lru_cache(maxsize=4096)
def binomial(n: int, k: int) -> int:
    """
    C(n, k) = (n)_k / k! for k >= 0 and 0 for k < 0. The upper index may be any integer.
    """
    if k < 0:
        return 0
    return int(falling(n, k)) // factorial(k)


def kronecker(i: int, j: int) -> int:
    return 1 if i == j else 0


def sign(m: int) -> int:
    """(-1)^m as an integer, also for negative m."""
    return -1 if m % 2 else 1
