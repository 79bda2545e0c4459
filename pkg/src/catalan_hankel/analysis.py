"""Analytic machinery over determinant tables.

Four tools: verifying that one determinant sequence is a sign-scaled
right-translation of another, the closed product formula for the k = 1
Catalan family, exact polynomial fitting of sign-normalized residue-class
subsequences, and extraction of generating-function numerators by
multiplying the truncated determinant series with a cyclotomic-style
factor power.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .hankel import DetTable, HankelKey
from .numbers import binomial, second_polygonal
from .ratpoly import (
    PalindromeClass,
    RatPoly,
    forward_difference_coefficients,
    newton_forward_poly,
    palindrome_class,
)
from .sequences import SeqSpec, catalan_conv

__all__ = [
    "TranslationClaim",
    "TranslationReport",
    "check_translation",
    "product_formula",
    "PolyFitSpec",
    "PolyFit",
    "fit_subsequence_poly",
    "GFExtraction",
    "extract_gf",
    "expected_gf_degree",
    "default_truncation",
    "expected_pal_class",
]

Parity = Literal["even", "odd"]

# a fit is trusted only when this many samples beyond the interpolation
# window still match
GUARD_SAMPLES = 3


@dataclass(frozen=True)
class TranslationClaim:
    """left sequence == sign-scaled right sequence pushed r slots right.

    Entry 0 of the left sequence must be 1, entries 1..r-1 must vanish,
    and entry r+i must equal sign * right(i); the leading 1 is never
    scaled.
    """

    left: tuple[SeqSpec, int]
    right: tuple[SeqSpec, int]
    r: int
    sign: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"translation amount must be >= 1, got {self.r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class TranslationReport:
    holds_through: int
    first_failure: tuple[int, int, int] | None  # (index, got, expected)

    @property
    def ok(self) -> bool:
        return self.first_failure is None


def check_translation(table: DetTable, claim: TranslationClaim, length: int) -> TranslationReport:
    """Compare the first ``length`` entries of both sides of a claim."""
    if length < claim.r:
        raise ValueError("comparison window shorter than the translation amount")
    left_spec, left_m = claim.left
    right_spec, right_m = claim.right
    for idx in range(length):
        got = table.det(HankelKey(left_spec, left_m, idx))
        if idx == 0:
            expected = 1
        elif idx < claim.r:
            expected = 0
        else:
            expected = claim.sign * table.det(HankelKey(right_spec, right_m, idx - claim.r))
        if got != expected:
            return TranslationReport(idx, (idx, got, expected))
    return TranslationReport(length, None)


def product_formula(m: int, n: int) -> Fraction:
    """Closed product over 1 <= i <= j <= m-1 of (2n+i+j)/(i+j).

    Equals the order-n Hankel determinant of the Catalan numbers shifted
    by m; the empty product (m <= 1) is 1.
    """
    if m < 0 or n < 0:
        raise ValueError("product formula needs m, n >= 0")
    result = Fraction(1)
    for i in range(1, m):
        for j in range(i, m):
            result *= Fraction(2 * n + i + j, i + j)
    return result


@dataclass(frozen=True)
class PolyFitSpec:
    """Fit (-1)^(n*sign_exponent) * Det(modulus*n + residue) over n = 0..max_n."""

    spec: SeqSpec
    m: int
    modulus: int
    residue: int
    sign_exponent: int
    max_n: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} outside [0, {self.modulus})")
        if self.max_n < 0:
            raise ValueError("max_n must be >= 0")


@dataclass(frozen=True)
class PolyFit:
    poly: RatPoly | None
    degree: int | None
    lead: Fraction | None
    guard_ok: bool
    samples: tuple[int, ...]


def fit_subsequence_poly(table: DetTable, fit: PolyFitSpec) -> PolyFit:
    """Minimal-degree exact polynomial through a residue-class subsequence.

    The Newton forward coefficients of the full sample window are computed
    once; the data is a polynomial of degree d exactly when all higher
    coefficients vanish.  The fit is only accepted when at least
    GUARD_SAMPLES samples beyond the interpolation window confirm it,
    otherwise the result is inconclusive (poly is None).
    """
    values = tuple(
        (-1) ** (n * fit.sign_exponent)
        * table.det(HankelKey(fit.spec, fit.m, fit.modulus * n + fit.residue))
        for n in range(fit.max_n + 1)
    )
    coeffs = forward_difference_coefficients(values)
    degree = -1
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i] != 0:
            degree = i
            break
    if fit.max_n - degree < GUARD_SAMPLES:
        return PolyFit(None, None, None, False, values)
    poly = newton_forward_poly(coeffs[: degree + 1])
    return PolyFit(poly, poly.degree, poly.leading_coefficient, True, values)


@dataclass(frozen=True)
class GFExtraction:
    factor: RatPoly
    exponent: int
    numerator: RatPoly
    truncation: int
    remainder_clean: bool
    degree: int
    pal_class: PalindromeClass | None


def gf_factor(parity: Parity, k: int) -> RatPoly:
    """The annihilating factor: even 1 - (-1)^C(k,2) x^k, odd 1 + (-1)^k x^(2k-1)."""
    if k < 1:
        raise ValueError(f"family index k must be >= 1, got {k}")
    if parity == "even":
        coeffs = [1] + [0] * (k - 1) + [-((-1) ** binomial(k, 2))]
    elif parity == "odd":
        coeffs = [1] + [0] * (2 * k - 2) + [(-1) ** k]
    else:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    return RatPoly(*coeffs)


def gf_exponent(k: int, m: int) -> int:
    return binomial(k + m, 2) + 1


def gf_family(parity: Parity, k: int) -> SeqSpec:
    return catalan_conv(2 * k if parity == "even" else 2 * k - 1)


def expected_gf_degree(parity: Parity, k: int, m: int) -> int:
    """Degree of the numerator: a second polygonal number of the shift."""
    if parity == "even":
        return second_polygonal(k + 2, m + k - 1)
    return second_polygonal(2 * k + 1, m + k - 1) + k


def default_truncation(parity: Parity, k: int, m: int) -> int:
    modulus = k if parity == "even" else 2 * k - 1
    return expected_gf_degree(parity, k, m) + modulus * (gf_exponent(k, m) + 1) + 8


def extract_gf(
    table: DetTable,
    parity: Parity,
    k: int,
    m: int,
    truncation: int | None = None,
) -> GFExtraction:
    """Multiply the truncated determinant series by factor^exponent.

    ``remainder_clean`` records whether every coefficient between the
    expected numerator degree and the truncation vanished; only then is
    the numerator trustworthy (and classified for palindromicity).
    """
    if m < 1 - k:
        raise ValueError(f"shift m must be >= {1 - k} for family index {k}")
    factor = gf_factor(parity, k)
    exponent = gf_exponent(k, m)
    spec = gf_family(parity, k)
    expected_degree = expected_gf_degree(parity, k, m)
    if truncation is None:
        truncation = default_truncation(parity, k, m)
    series = table.sequence(spec, m, truncation + 1)
    multiplier = factor**exponent
    product = [0] * (truncation + 1)
    for i, c in enumerate(multiplier.coeffs):
        if c:
            ci = int(c)
            for n in range(truncation + 1 - i):
                product[i + n] += ci * series[n]
    clean = truncation > expected_degree and all(
        c == 0 for c in product[expected_degree + 1 :]
    )
    if clean:
        numerator = RatPoly(*product[: expected_degree + 1])
    else:
        numerator = RatPoly(*product)
    pal = None
    if clean and not numerator.is_zero():
        pal = palindrome_class(numerator)
    return GFExtraction(
        factor=factor,
        exponent=exponent,
        numerator=numerator,
        truncation=truncation,
        remainder_clean=clean,
        degree=numerator.degree,
        pal_class=pal,
    )


def expected_pal_class(parity: Parity, k: int, m: int) -> PalindromeClass | None:
    """The asserted palindrome class, or None where no class is asserted.

    The case rules only enumerate some residues of k and m; combinations
    outside them are observed by the checkers but never asserted.
    """
    if parity == "even":
        if k % 4 == 1:
            return PalindromeClass.PALINDROMIC
        if k % 4 == 0:
            return (
                PalindromeClass.PALINDROMIC
                if m % 2 == 1
                else PalindromeClass.SKEW_PALINDROMIC
            )
        if k % 4 == 2:
            return PalindromeClass.PALINDROMIC if m % 4 in (0, 3) else None
        return PalindromeClass.PALINDROMIC if m % 4 in (1, 2) else None
    if parity == "odd":
        if k % 4 == 1:
            return PalindromeClass.PALINDROMIC if m % 2 == 0 else None
        if k % 4 == 3:
            return PalindromeClass.PALINDROMIC if m % 2 == 1 else None
        return PalindromeClass.PALINDROMIC if m % 4 in (0, 1) else None
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
