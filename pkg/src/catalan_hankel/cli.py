"""Command-line front end.

Subcommands: ``seq`` and ``det`` print sequence and determinant prefixes,
``check`` runs registered checkers and serializes their reports, ``table``
regenerates the embedded reference tables with an inline diff, ``gf``
extracts one generating-function numerator, and ``cache`` inspects or
verifies the on-disk determinant cache.

Exit codes: ``check`` returns 0 when every report is consistent, 2 when
any is refuted, and 3 when any is inconclusive (and none refuted); a
failed ``cache verify`` returns 1; usage and validation errors return 64.
All output is deterministic for a fixed configuration and cache state.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .analysis import default_truncation, extract_gf
from .conjectures import (
    Budget,
    ConjectureStatus,
    TABLE_NAMES,
    checker_ids,
    generate_table,
    run_checker,
)
from .detcache import append_records, default_cache_path, read_records, verify_sample
from .hankel import DetTable
from .sequences import Family, SeqSpec, seq_prefix

USAGE_ERROR = 64

BUDGET_PRESETS = {
    "default": Budget(),
    "quick": Budget(max_order=40),
}


def _parse_budget(text: str) -> Budget:
    if text in BUDGET_PRESETS:
        return BUDGET_PRESETS[text]
    values: dict[str, int] = {}
    for chunk in text.split(","):
        key, sep, raw = chunk.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in ("max_order", "max_index", "truncation"):
            raise ValueError(
                f"bad budget {text!r}: expected a preset ({', '.join(BUDGET_PRESETS)})"
                " or comma-separated max-order=INT, max-index=INT, truncation=INT"
            )
        values[key] = int(raw)
    return Budget(**values)


def _family(name: str) -> Family:
    try:
        return Family(name)
    except ValueError:
        raise ValueError(f"unknown family {name!r}; expected catalan or binomial") from None


def _render_values(values: list[int], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([str(v) for v in values])
    if fmt == "csv":
        return ",".join(str(v) for v in values)
    return " ".join(str(v) for v in values)


def _load_cache_into(table: DetTable, path: str | None) -> None:
    if not path:
        return
    try:
        result = read_records(path)
    except FileNotFoundError:
        return
    for lineno in result.corrupt_lines:
        print(f"warning: {path}:{lineno}: corrupt cache record skipped", file=sys.stderr)
    table.preload(result.entries)


def _store_cache_from(table: DetTable, path: str | None) -> None:
    if not path:
        return
    fresh = table.computed_entries()
    if fresh:
        append_records(path, fresh)


def cmd_seq(args: argparse.Namespace) -> int:
    spec = SeqSpec(_family(args.family), args.k)
    print(_render_values(seq_prefix(spec, args.length), args.format))
    return 0


def cmd_det(args: argparse.Namespace) -> int:
    spec = SeqSpec(_family(args.family), args.k)
    table = DetTable()
    path = default_cache_path(args.cache)
    _load_cache_into(table, path)
    values = table.sequence(spec, args.m, args.length, jobs=args.jobs)
    print(_render_values(values, args.format))
    _store_cache_from(table, path)
    return 0


def _report_markdown(report) -> list[str]:
    lines = [f"## {report.id}: {report.status.value}"]
    for entry in report.verified:
        point = ", ".join(f"{k}={v}" for k, v in entry["point"].items())
        lines.append(f"- ok [{point}] over {entry['range']}")
    for ce in report.counterexamples:
        point = ", ".join(f"{k}={v}" for k, v in ce["point"].items())
        lines.append(
            f"- COUNTEREXAMPLE [{point}] at {ce['index']}:"
            f" expected {ce['expected']}, got {ce['actual']}"
        )
    for note in report.notes:
        lines.append(f"- note: {note}")
    return lines


def cmd_check(args: argparse.Namespace) -> int:
    ids = list(args.checkers)
    if ids == ["all"]:
        ids = checker_ids()
    unknown = [cid for cid in ids if cid not in checker_ids()]
    if unknown:
        print(
            f"error: unknown checker id(s): {', '.join(unknown)};"
            f" known: {', '.join(checker_ids())} (or 'all')",
            file=sys.stderr,
        )
        return USAGE_ERROR
    budget = args.budget
    table = DetTable()
    path = default_cache_path(args.cache)
    _load_cache_into(table, path)
    if args.jobs > 1 and len(ids) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(lambda cid: run_checker(table, cid, budget), ids))
    else:
        reports = [run_checker(table, cid, budget) for cid in ids]
    if args.format == "json":
        print(json.dumps({"reports": [r.to_json_dict() for r in reports]}, indent=2))
    elif args.format == "csv":
        print("id,status,verified,counterexamples,notes")
        for r in reports:
            print(
                f"{r.id},{r.status.value},{len(r.verified)},"
                f"{len(r.counterexamples)},{len(r.notes)}"
            )
    else:
        for r in reports:
            print("\n".join(_report_markdown(r)))
    _store_cache_from(table, path)
    statuses = {r.status for r in reports}
    if ConjectureStatus.REFUTED in statuses:
        return 2
    if ConjectureStatus.INCONCLUSIVE in statuses:
        return 3
    return 0


def _cell_text(cell) -> str:
    if cell.computed is None:
        return "?"
    if cell.match:
        return str(cell.computed)
    return f"{cell.computed} (ref {cell.expected})"


def cmd_table(args: argparse.Namespace) -> int:
    if args.name not in TABLE_NAMES:
        print(
            f"error: unknown table {args.name!r}; known: {', '.join(TABLE_NAMES)}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    table = DetTable()
    path = default_cache_path(args.cache)
    _load_cache_into(table, path)
    cells = generate_table(table, args.name, args.budget)
    rows = sorted({c.row for c in cells})
    js = sorted({c.j for c in cells})
    by_pos = {(c.row, c.j): c for c in cells}
    if args.format == "json":
        payload = [
            {
                "row": c.row,
                "j": c.j,
                "computed": None if c.computed is None else str(c.computed),
                "expected": str(c.expected),
                "match": c.match,
            }
            for c in cells
        ]
        print(json.dumps({"table": args.name, "cells": payload}, indent=2))
    elif args.format == "csv":
        print("row,j,computed,expected,match")
        for c in cells:
            computed = "" if c.computed is None else str(c.computed)
            match = "" if c.match is None else str(c.match).lower()
            print(f"{c.row},{c.j},{computed},{c.expected},{match}")
    else:
        header = ["row"] + [f"j={j}" for j in js]
        widths = [max(len(header[0]), 3)] + [len(h) for h in header[1:]]
        body = []
        for row in rows:
            texts = [str(row)]
            for idx, j in enumerate(js):
                cell = by_pos.get((row, j))
                text = _cell_text(cell) if cell else ""
                widths[idx + 1] = max(widths[idx + 1], len(text))
                texts.append(text)
            body.append(texts)
        widths[0] = max(widths[0], max(len(t[0]) for t in body))
        print(" | ".join(h.ljust(w) for h, w in zip(header, widths)))
        print("-|-".join("-" * w for w in widths))
        for texts in body:
            print(" | ".join(t.ljust(w) for t, w in zip(texts, widths)))
    mismatched = [c for c in cells if c.match is False]
    skipped = [c for c in cells if c.computed is None]
    if mismatched:
        print(f"{len(mismatched)} cell(s) disagree with the reference", file=sys.stderr)
    if skipped:
        print(f"{len(skipped)} cell(s) skipped (budget)", file=sys.stderr)
    _store_cache_from(table, path)
    return 0


def cmd_gf(args: argparse.Namespace) -> int:
    if args.k < 1:
        print("error: -k must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    if args.m < 1 - args.k:
        print(f"error: -m must be >= {1 - args.k} for k={args.k}", file=sys.stderr)
        return USAGE_ERROR
    table = DetTable()
    path = default_cache_path(args.cache)
    _load_cache_into(table, path)
    truncation = args.truncation or default_truncation(args.parity, args.k, args.m)
    extraction = extract_gf(table, args.parity, args.k, args.m, truncation)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "parity": args.parity,
                    "k": args.k,
                    "m": args.m,
                    "factor": [str(c) for c in extraction.factor.coeffs],
                    "exponent": extraction.exponent,
                    "truncation": extraction.truncation,
                    "remainder_clean": extraction.remainder_clean,
                    "degree": extraction.degree,
                    "numerator": [str(c) for c in extraction.numerator.coeffs],
                    "palindrome_class": (
                        extraction.pal_class.value if extraction.pal_class else None
                    ),
                },
                indent=2,
            )
        )
    else:
        sep = "," if args.format == "csv" else " "
        print(f"factor: ({extraction.factor})^{extraction.exponent}")
        print(f"clean through x^{extraction.truncation}: {extraction.remainder_clean}")
        print(f"degree: {extraction.degree}")
        print(f"numerator: {sep.join(str(c) for c in extraction.numerator.coeffs)}")
        if extraction.pal_class:
            print(f"class: {extraction.pal_class.value}")
    _store_cache_from(table, path)
    return 0 if extraction.remainder_clean else 3


def cmd_cache(args: argparse.Namespace) -> int:
    path = default_cache_path(args.cache)
    if not path:
        print("error: no cache path (use --cache or CATALAN_HANKEL_CACHE)", file=sys.stderr)
        return USAGE_ERROR
    try:
        result = read_records(path)
    except FileNotFoundError:
        print(f"error: cache file not found: {path}", file=sys.stderr)
        return USAGE_ERROR
    for lineno in result.corrupt_lines:
        print(f"warning: {path}:{lineno}: corrupt cache record skipped", file=sys.stderr)
    if args.action == "load":
        print(f"loaded {len(result.entries)} record(s), skipped {len(result.corrupt_lines)}")
        return 0
    divergences = verify_sample(result.entries, seed=args.seed)
    checked = max(1, round(len(result.entries) * 0.01)) if result.entries else 0
    if divergences:
        for key, stored, recomputed in divergences:
            print(
                f"DIVERGENT {key.spec.family.value} k={key.spec.k} m={key.m} n={key.n}:"
                f" stored {stored}, recomputed {recomputed}"
            )
        return 1
    print(f"verified {min(checked, len(result.entries))} sampled record(s): all match")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-hankel",
        description="exact Hankel determinant tables and their claim checkers",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def shared(p: argparse.ArgumentParser, *, cache: bool = True) -> None:
        p.add_argument("--format", choices=("md", "csv", "json"), default="md")
        if cache:
            p.add_argument("--cache", metavar="PATH", default=None)

    p_seq = sub.add_parser("seq", help="print a sequence prefix")
    p_seq.add_argument("--family", default="catalan")
    p_seq.add_argument("-k", type=int, required=True)
    p_seq.add_argument("-N", dest="length", type=int, required=True)
    shared(p_seq, cache=False)
    p_seq.set_defaults(func=cmd_seq)

    p_det = sub.add_parser("det", help="print a determinant sequence")
    p_det.add_argument("--family", default="catalan")
    p_det.add_argument("-k", type=int, required=True)
    p_det.add_argument("-m", type=int, default=0)
    p_det.add_argument("-N", dest="length", type=int, required=True)
    p_det.add_argument("--jobs", type=int, default=1)
    shared(p_det)
    p_det.set_defaults(func=cmd_det)

    p_check = sub.add_parser("check", help="run claim checkers")
    p_check.add_argument("checkers", nargs="+", metavar="ID")
    p_check.add_argument("--budget", type=_parse_budget, default=Budget())
    p_check.add_argument("--jobs", type=int, default=1)
    shared(p_check)
    p_check.set_defaults(func=cmd_check)

    p_table = sub.add_parser("table", help="regenerate a reference table")
    p_table.add_argument("name", metavar="NAME")
    p_table.add_argument("--budget", type=_parse_budget, default=Budget())
    shared(p_table)
    p_table.set_defaults(func=cmd_table)

    p_gf = sub.add_parser("gf", help="extract a generating-function numerator")
    p_gf.add_argument("--parity", choices=("even", "odd"), required=True)
    p_gf.add_argument("-k", type=int, required=True)
    p_gf.add_argument("-m", type=int, required=True)
    p_gf.add_argument("--truncation", type=int, default=None)
    shared(p_gf)
    p_gf.set_defaults(func=cmd_gf)

    p_cache = sub.add_parser("cache", help="inspect or verify the determinant cache")
    p_cache.add_argument("action", choices=("load", "verify"))
    p_cache.add_argument("--seed", type=int, default=0)
    shared(p_cache)
    p_cache.set_defaults(func=cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; keep 2 reserved for refutations
        if exc.code not in (0, None):
            return USAGE_ERROR
        return 0
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
