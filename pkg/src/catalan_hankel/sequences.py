"""The two base integer families feeding every Hankel matrix.

``Family.CATALAN`` holds the k-th convolution power of the Catalan
numbers, computed through the manifestly integral binomial difference
C(2n+k-1, n) - C(2n+k-1, n-1).  ``Family.BINOMIAL`` holds the companion
central-binomial family C(2n+k, n).  Both are extended by zero to
negative indices.  A brute-force series-convolution oracle is provided so
tests never have to trust the closed form they are checking.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass

from .numbers import binomial

__all__ = [
    "Family",
    "SeqSpec",
    "catalan_conv",
    "central_binomial",
    "seq_value",
    "seq_prefix",
    "conv_power_oracle",
]


class Family(str, enum.Enum):
    CATALAN = "catalan"
    BINOMIAL = "binomial"


@dataclass(frozen=True)
class SeqSpec:
    """Which family and which convolution index k >= 1."""

    family: Family
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.k < 1:
            raise ValueError(f"sequence index k must be >= 1, got {self.k}")


def catalan_conv(k: int) -> SeqSpec:
    return SeqSpec(Family.CATALAN, k)


def central_binomial(k: int) -> SeqSpec:
    return SeqSpec(Family.BINOMIAL, k)


def _term(spec: SeqSpec, n: int) -> int:
    if n < 0:
        return 0
    k = spec.k
    if spec.family is Family.CATALAN:
        return binomial(2 * n + k - 1, n) - binomial(2 * n + k - 1, n - 1)
    return binomial(2 * n + k, n)


# Growable per-spec prefix caches; Hankel matrices hit contiguous windows
# of the same spec over and over, so extension is serialized and reads are
# lock-free snapshots.
_prefixes: dict[SeqSpec, list[int]] = {}
_lock = threading.Lock()


def _extend(spec: SeqSpec, length: int) -> list[int]:
    cached = _prefixes.get(spec)
    if cached is not None and len(cached) >= length:
        return cached
    with _lock:
        cached = _prefixes.setdefault(spec, [])
        for n in range(len(cached), length):
            cached.append(_term(spec, n))
    return cached


def seq_value(spec: SeqSpec, n: int) -> int:
    """Sequence entry at index n; 0 for every n < 0."""
    if n < 0:
        return 0
    return _extend(spec, n + 1)[n]


def seq_prefix(spec: SeqSpec, length: int) -> list[int]:
    """Entries at indices 0 .. length-1 as a fresh list."""
    if length < 0:
        raise ValueError(f"prefix length must be >= 0, got {length}")
    return _extend(spec, length)[:length]


def conv_power_oracle(k: int, length: int) -> list[int]:
    """First coefficients of the k-th power of the Catalan series.

    Independent of the binomial closed form: the Catalan numbers come from
    the quadratic recurrence C_{n+1} = sum_i C_i C_{n-i} and the power is
    built by explicit repeated convolution.
    """
    if k < 1:
        raise ValueError(f"convolution power needs k >= 1, got {k}")
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length == 0:
        return []
    catalan = [1]
    while len(catalan) < length:
        n = len(catalan) - 1
        catalan.append(sum(catalan[i] * catalan[n - i] for i in range(n + 1)))
    power = catalan[:length]
    for _ in range(k - 1):
        power = [
            sum(power[i] * catalan[n - i] for i in range(n + 1))
            for n in range(length)
        ]
    return power
