"""On-disk determinant cache.

Append-only text file, one record per line, five tab-separated fields:

    family<TAB>k<TAB>m<TAB>n<TAB>value

where family is ``catalan`` or ``binomial`` and value is the determinant
as a signed decimal string (never fixed-width; magnitudes are unbounded).
Corrupt lines are skipped with a warning rather than aborting the load;
a verify pass recomputes a deterministic 1% sample from scratch.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .hankel import HankelKey, bareiss_det, hankel_matrix
from .sequences import Family, SeqSpec

__all__ = ["read_records", "append_records", "verify_sample", "default_cache_path"]

CACHE_PATH_ENV = "CATALAN_HANKEL_CACHE"
VERIFY_FRACTION = 0.01


def default_cache_path(explicit: str | None = None) -> str | None:
    """Resolve the cache path: explicit flag first, then the environment."""
    if explicit:
        return explicit
    return os.environ.get(CACHE_PATH_ENV)


def format_record(key: HankelKey, value: int) -> str:
    return f"{key.spec.family.value}\t{key.spec.k}\t{key.m}\t{key.n}\t{value}"


def parse_record(line: str) -> tuple[HankelKey, int]:
    family, k, m, n, value = line.split("\t")
    return HankelKey(SeqSpec(Family(family), int(k)), int(m), int(n)), int(value)


@dataclass
class LoadResult:
    entries: dict[HankelKey, int]
    corrupt_lines: list[int]  # 1-based line numbers that were skipped


def read_records(path: str) -> LoadResult:
    """Load every parseable record; later records win duplicate keys."""
    entries: dict[HankelKey, int] = {}
    corrupt: list[int] = []
    with open(path, "r", encoding="ascii") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                key, value = parse_record(line)
            except (ValueError, KeyError):
                corrupt.append(lineno)
                continue
            entries[key] = value
    return LoadResult(entries, corrupt)


def append_records(path: str, entries: dict[HankelKey, int]) -> int:
    """Append records in a deterministic key order; returns the count written."""
    ordered = sorted(
        entries.items(), key=lambda kv: (kv[0].spec.family.value, kv[0].spec.k, kv[0].m, kv[0].n)
    )
    with open(path, "a", encoding="ascii") as handle:
        for key, value in ordered:
            handle.write(format_record(key, value) + "\n")
    return len(ordered)


def verify_sample(
    entries: dict[HankelKey, int], fraction: float = VERIFY_FRACTION, seed: int = 0
) -> list[tuple[HankelKey, int, int]]:
    """Recompute a deterministic random sample; returns (key, stored, recomputed) divergences.

    At least one record is always checked.  The recomputation bypasses all
    caches.
    """
    if not entries:
        return []
    keys = sorted(
        entries, key=lambda k: (k.spec.family.value, k.spec.k, k.m, k.n)
    )
    sample_size = max(1, round(len(keys) * fraction))
    rng = random.Random(seed)
    sampled = rng.sample(keys, min(sample_size, len(keys)))
    divergences = []
    for key in sampled:
        recomputed = bareiss_det(hankel_matrix(key))
        if recomputed != entries[key]:
            divergences.append((key, entries[key], recomputed))
    return divergences
