"""Exact integer and rational building blocks.

Everything in this package is computed over arbitrary-precision integers
(plain ``int``) and exact rationals (``fractions.Fraction``); no value is
ever rounded.  This module collects the small number-theoretic helpers the
determinant analysis relies on: generalized binomials, odd double
factorials and their running product, second polygonal numbers, Bernoulli
numbers, and the tangent/cotangent series coefficients built from them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

__all__ = [
    "binomial",
    "odd_double_factorial",
    "double_factorial_product",
    "second_polygonal",
    "bernoulli",
    "tangent_coefficient",
    "cot_coefficient",
]


def binomial(n: int, r: int) -> int:
    """Generalized binomial coefficient C(n, r) as an exact integer.

    Returns 0 when r < 0 or when 0 <= n < r.  Negative n uses the
    generalized identity C(n, r) = (-1)^r C(r - n - 1, r), so sign
    exponents like C(-1, 2) stay meaningful.
    """
    if r < 0:
        return 0
    if n >= 0:
        return comb(n, r) if r <= n else 0
    return (-1) ** r * comb(r - n - 1, r)


def odd_double_factorial(j: int) -> int:
    """(2j - 1)!! = 1 * 3 * ... * (2j - 1) for j >= 1."""
    if j < 1:
        raise ValueError(f"odd double factorial needs j >= 1, got {j}")
    result = 1
    for i in range(1, 2 * j, 2):
        result *= i
    return result


def double_factorial_product(m: int) -> int:
    """Product of odd double factorials (2j - 1)!! over 1 <= j <= m - 1.

    The empty product (m = 1) is 1.  This is the normalizer that turns the
    leading coefficients of the even-family fitted polynomials into
    integers.
    """
    if m < 1:
        raise ValueError(f"double factorial product needs m >= 1, got {m}")
    result = 1
    for j in range(1, m):
        result *= odd_double_factorial(j)
    return result


def second_polygonal(k: int, n: int) -> int:
    """Second k-gonal number (n/2)((k-2)n + (k-4)), exact for all n >= 0.

    The numerator n((k-2)n + (k-4)) is always even, so the division is
    exact in integers.
    """
    if k < 3:
        raise ValueError(f"second polygonal numbers need k >= 3, got {k}")
    return n * ((k - 2) * n + (k - 4)) // 2


_bernoulli_even: list[Fraction] = [Fraction(1)]  # B_0, B_2, B_4, ...


def bernoulli(idx: int) -> Fraction:
    """Bernoulli number B_idx for even idx >= 0, as an exact Fraction.

    Uses the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 over even indices;
    odd Bernoulli numbers beyond B_1 vanish and the single B_1 = -1/2 term
    is folded in directly.
    """
    if idx < 0 or idx % 2 != 0:
        raise ValueError(f"only even non-negative Bernoulli indices are supported, got {idx}")
    half = idx // 2
    while len(_bernoulli_even) <= half:
        n = 2 * len(_bernoulli_even)
        acc = Fraction(-(n + 1), 2)  # the C(n+1, 1) * B_1 term
        for j, b in enumerate(_bernoulli_even):
            acc += comb(n + 1, 2 * j) * b
        _bernoulli_even.append(-acc / (n + 1))
    return _bernoulli_even[half]


def tangent_coefficient(k: int) -> Fraction:
    """Coefficient of x^(2k-1) in the series of tan x, for k >= 1.

    Equals (-1)^(k-1) 2^(2k) (2^(2k) - 1) B_2k / (2k)!; all values are
    positive.
    """
    if k < 1:
        raise ValueError(f"tangent coefficients need k >= 1, got {k}")
    power = 2 ** (2 * k)
    return (-1) ** (k - 1) * power * (power - 1) * bernoulli(2 * k) / factorial(2 * k)


def cot_coefficient(k: int) -> Fraction:
    """Coefficient of x^(2k) in the series of x * cot x, for k >= 0."""
    if k < 0:
        raise ValueError(f"cotangent coefficients need k >= 0, got {k}")
    return (-1) ** k * 2 ** (2 * k) * bernoulli(2 * k) / factorial(2 * k)
