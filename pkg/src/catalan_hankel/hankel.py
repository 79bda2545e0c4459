"""Hankel matrices of shifted sequences and exact determinants.

The determinant kernel is fraction-free Bareiss elimination with row
pivoting: every intermediate value is an exact integer minor, divisions
are exact, and a fully zero pivot column short-circuits to determinant 0.
A Laplace-expansion oracle (capped at order 8) provides an independent
cross-check.  ``DetTable`` memoizes determinants per (family, k, m, n) and
tracks which entries were computed here versus preloaded from a cache
file.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .sequences import SeqSpec, seq_prefix, seq_value

__all__ = [
    "HankelKey",
    "hankel_matrix",
    "bareiss_det",
    "cofactor_det",
    "DetTable",
    "det_value",
]

COFACTOR_ORDER_CAP = 8


@dataclass(frozen=True)
class HankelKey:
    """Identifies one determinant: sequence spec, shift m, matrix order n."""

    spec: SeqSpec
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"matrix order must be >= 0, got {self.n}")


def hankel_matrix(key: HankelKey) -> list[list[int]]:
    """Order-n matrix with entry (i, j) = sequence value at i + j + m."""
    n, m = key.n, key.m
    if n == 0:
        return []
    top = 2 * (n - 1) + m
    if top >= 0:
        prefix = seq_prefix(key.spec, top + 1)
        row = [prefix[i] if i >= 0 else 0 for i in range(m, m + 2 * n - 1)]
    else:
        row = [0] * (2 * n - 1)
    return [row[i : i + n] for i in range(n)]


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix; the 0x0 matrix gives 1."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for i in range(n - 1):
        pivot_row = m[i]
        if pivot_row[i] == 0:
            for r in range(i + 1, n):
                if m[r][i]:
                    m[i], m[r] = m[r], m[i]
                    pivot_row = m[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = pivot_row[i]
        for r in range(i + 1, n):
            row = m[r]
            factor = row[i]
            if factor:
                for c in range(i + 1, n):
                    row[c] = (row[c] * pivot - factor * pivot_row[c]) // prev
                row[i] = 0
            else:
                # the cross term vanishes but the minor rescaling does not
                for c in range(i + 1, n):
                    row[c] = row[c] * pivot // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def cofactor_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant by Laplace expansion; rejected above order 8 (factorial cost)."""
    n = len(rows)
    if n > COFACTOR_ORDER_CAP:
        raise ValueError(f"cofactor expansion is capped at order {COFACTOR_ORDER_CAP}, got {n}")
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")

    def expand(matrix: list[list[int]]) -> int:
        size = len(matrix)
        if size == 0:
            return 1
        if size == 1:
            return matrix[0][0]
        total = 0
        rest = matrix[1:]
        for j, entry in enumerate(matrix[0]):
            if entry == 0:
                continue
            minor = [row[:j] + row[j + 1 :] for row in rest]
            total += (-1) ** j * entry * expand(minor)
        return total

    return expand([list(r) for r in rows])


class DetTable:
    """Memoized exact determinants with read-mostly concurrency.

    Reads are lock-free dict lookups; inserts are serialized.  Entries
    loaded from a cache file are tracked separately from ones computed in
    this process so a cache command can append only fresh records.
    """

    def __init__(self) -> None:
        self._entries: dict[HankelKey, int] = {}
        self._loaded: set[HankelKey] = set()
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    def det(self, key: HankelKey) -> int:
        value = self._entries.get(key)
        if value is None:
            value = bareiss_det(hankel_matrix(key))
            with self._lock:
                self._entries.setdefault(key, value)
        return value

    def det_at(self, spec: SeqSpec, m: int, n: int) -> int:
        return self.det(HankelKey(spec, m, n))

    def sequence(self, spec: SeqSpec, m: int, length: int, jobs: int = 1) -> list[int]:
        """Determinants at orders 0 .. length-1, optionally evaluated in parallel."""
        if length < 0:
            raise ValueError(f"sequence length must be >= 0, got {length}")
        keys = [HankelKey(spec, m, n) for n in range(length)]
        if jobs > 1 and length > 1:
            # Warm the shared prefix cache before the workers fan out.
            top = 2 * (length - 2) + m
            if top >= 0:
                seq_prefix(spec, top + 1)
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                return list(pool.map(self.det, keys))
        return [self.det(key) for key in keys]

    def preload(self, entries: Mapping[HankelKey, int]) -> None:
        """Adopt cache-file entries; they win no conflicts against computed ones."""
        with self._lock:
            for key, value in entries.items():
                if key not in self._entries:
                    self._entries[key] = value
                    self._loaded.add(key)

    def computed_entries(self) -> dict[HankelKey, int]:
        """Entries computed in this process (not preloaded)."""
        return {k: v for k, v in self._entries.items() if k not in self._loaded}

    def all_entries(self) -> dict[HankelKey, int]:
        return dict(self._entries)

    def is_loaded(self, key: HankelKey) -> bool:
        return key in self._loaded


_default_table = DetTable()


def det_value(key: HankelKey, table: DetTable | None = None) -> int:
    """Cached determinant for a key, using the module-wide table by default."""
    return (table or _default_table).det(key)


def fresh_recompute(keys: Iterable[HankelKey]) -> dict[HankelKey, int]:
    """Recompute determinants from scratch, bypassing every table."""
    return {key: bareiss_det(hankel_matrix(key)) for key in keys}
