"""Dense univariate polynomials with exact rational coefficients.

A polynomial is stored as a tuple of Fractions, constant term first, with
trailing zeros trimmed; ``RatPoly(1, 2, 1)`` is 1 + 2x + x^2.  The zero
polynomial stores an empty tuple and has degree -1.  Alongside the class
live the finite-difference and Newton-interpolation helpers used to fit
determinant subsequences, and the palindrome classifier for generating
function numerators.
"""

from __future__ import annotations

import dataclasses
import enum
import itertools
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

__all__ = [
    "RatPoly",
    "PalindromeClass",
    "palindrome_class",
    "finite_differences",
    "newton_interpolate",
    "leading_info",
]

Rational = Fraction | int


@dataclasses.dataclass(init=False, eq=True, frozen=True)
class RatPoly:
    """Immutable dense polynomial over the rationals."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, *coeffs: Rational):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational]) -> RatPoly:
        return cls(*coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def evaluate(self, x: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reciprocal(self) -> RatPoly:
        """Coefficient reversal x^deg * p(1/x); the zero polynomial maps to itself."""
        return RatPoly(*reversed(self.coeffs))

    def __add__(self, other: RatPoly | Rational) -> RatPoly:
        other_coeffs = other.coeffs if isinstance(other, RatPoly) else (Fraction(other),)
        return RatPoly(*(a + b for a, b in itertools.zip_longest(self.coeffs, other_coeffs, fillvalue=0)))

    __radd__ = __add__

    def __sub__(self, other: RatPoly | Rational) -> RatPoly:
        other_coeffs = other.coeffs if isinstance(other, RatPoly) else (Fraction(other),)
        return RatPoly(*(a - b for a, b in itertools.zip_longest(self.coeffs, other_coeffs, fillvalue=0)))

    def __neg__(self) -> RatPoly:
        return RatPoly(*(-c for c in self.coeffs))

    def __mul__(self, other: RatPoly | Rational) -> RatPoly:
        if not isinstance(other, RatPoly):
            return RatPoly(*(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return RatPoly()
        result = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    result[i + j] += a * b
        return RatPoly(*result)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RatPoly:
        if n < 0:
            raise ValueError("negative polynomial powers are not defined here")
        result = RatPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i > 0 and abs(c) == 1:
                body = term
            elif i == 0:
                body = str(abs(c))
            else:
                body = f"{abs(c)}*{term}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


class PalindromeClass(enum.Enum):
    PALINDROMIC = "palindromic"
    SKEW_PALINDROMIC = "skew-palindromic"
    NEITHER = "neither"


def palindrome_class(p: RatPoly) -> PalindromeClass:
    """Classify a nonzero polynomial by comparing it with its reciprocal."""
    if p.is_zero():
        raise ValueError("palindrome classification is undefined for the zero polynomial")
    forward = p.coeffs
    backward = tuple(reversed(forward))
    if forward == backward:
        return PalindromeClass.PALINDROMIC
    if forward == tuple(-c for c in backward):
        return PalindromeClass.SKEW_PALINDROMIC
    return PalindromeClass.NEITHER


def finite_differences(values: Sequence[Rational]) -> list[Fraction]:
    """Consecutive differences v[i+1] - v[i]; length shrinks by one."""
    if not values:
        raise ValueError("finite differences need at least one value")
    vs = [Fraction(v) for v in values]
    return [b - a for a, b in zip(vs, vs[1:])]


def newton_interpolate(samples: Sequence[tuple[int, Rational]]) -> RatPoly:
    """Unique polynomial of degree < len(samples) through the given points.

    Divided differences keep everything rational; duplicate abscissae are
    rejected.
    """
    if not samples:
        raise ValueError("interpolation needs at least one sample")
    xs = [s[0] for s in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    table = [Fraction(v) for _, v in samples]
    coeffs = [table[0]]
    for level in range(1, len(samples)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        coeffs.append(table[0])
    poly = RatPoly(coeffs[-1])
    for i in range(len(coeffs) - 2, -1, -1):
        poly = poly * RatPoly(-xs[i], 1) + RatPoly(coeffs[i])
    return poly


def leading_info(p: RatPoly) -> tuple[int, Fraction]:
    """(degree, leading coefficient); (-1, 0) for the zero polynomial."""
    return p.degree, p.leading_coefficient


def forward_difference_coefficients(values: Sequence[Rational]) -> list[Fraction]:
    """Newton forward coefficients c_i at integer abscissae 0, 1, 2, ...

    c_i is the i-th forward difference at 0 divided by i!, i.e. the
    coefficient of the falling-factorial basis element x(x-1)...(x-i+1).
    The input values are a polynomial of degree d exactly when every c_i
    with i > d vanishes.
    """
    diffs = [Fraction(v) for v in values]
    coeffs = [diffs[0]]
    for i in range(1, len(values)):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        coeffs.append(diffs[0] / factorial(i))
    return coeffs


def newton_forward_poly(coeffs: Sequence[Fraction]) -> RatPoly:
    """Expand Newton forward coefficients (abscissae 0, 1, 2, ...) densely."""
    poly = RatPoly()
    basis = RatPoly(1)
    for i, c in enumerate(coeffs):
        if c:
            poly = poly + basis * c
        basis = basis * RatPoly(-i, 1)
    return poly
