"""CLI surface: rendering, exit codes, cache round-trips, determinism."""

import json
import subprocess
import sys

import pytest

from catalan_hankel import cli
from catalan_hankel.conjectures import CHECKERS, Budget, _Builder, _scan_pattern
from catalan_hankel.detcache import read_records
from catalan_hankel.sequences import catalan_conv


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_output(capsys):
    code, out, _ = run_cli(capsys, "seq", "--family", "catalan", "-k", "1", "-N", "5")
    assert code == 0 and out == "1 1 2 5 14\n"
    code, out, _ = run_cli(capsys, "seq", "--family", "binomial", "-k", "1", "-N", "3")
    assert code == 0 and out == "1 3 10\n"


def test_seq_usage_error(capsys):
    code, _, err = run_cli(capsys, "seq", "--family", "catalan", "-k", "0", "-N", "3")
    assert code == 64 and "k must be >= 1" in err
    code, _, _ = run_cli(capsys, "seq", "-k", "1")
    assert code == 64
    code, _, err = run_cli(capsys, "seq", "--family", "other", "-k", "1", "-N", "3")
    assert code == 64 and "unknown family" in err


def test_det_output(capsys):
    code, out, _ = run_cli(capsys, "det", "-k", "3", "-m", "1", "-N", "12")
    assert code == 0 and out == "1 3 3 -1 -6 -6 1 9 9 -1 -12 -12\n"
    code, out, _ = run_cli(capsys, "det", "-k", "1", "-m", "0", "-N", "8")
    assert code == 0 and out == "1 1 1 1 1 1 1 1\n"
    code, out, _ = run_cli(capsys, "det", "-k", "5", "-m", "0", "-N", "12")
    assert code == 0 and out == "1 1 -5 0 5 1 1 -10 0 10 1 1\n"


def test_det_formats(capsys):
    code, out, _ = run_cli(capsys, "det", "-k", "3", "-m", "1", "-N", "4", "--format", "csv")
    assert code == 0 and out == "1,3,3,-1\n"
    code, out, _ = run_cli(capsys, "det", "-k", "3", "-m", "1", "-N", "4", "--format", "json")
    assert code == 0 and json.loads(out) == ["1", "3", "3", "-1"]


def test_check_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "check", "thm2")
    assert code == 0 and "thm2: consistent" in out

    code, _, err = run_cli(capsys, "check", "nosuch")
    assert code == 64 and "unknown checker" in err

    code, _, _ = run_cli(capsys, "check", "conj6", "--budget", "max-order=10")
    assert code == 3  # inconclusive, none refuted


def test_check_forced_refutation(capsys):
    def bogus(table, budget, params):
        b = _Builder("bogus", {})
        _scan_pattern(
            table, b, {"k": 1}, catalan_conv(1), 0, 1, {0: lambda q: 2}, False, 4, budget
        )
        return b.report()

    CHECKERS["bogus"] = bogus
    try:
        code, out, _ = run_cli(capsys, "check", "bogus")
        assert code == 2
        assert "COUNTEREXAMPLE" in out
        # refuted beats inconclusive in the exit contract
        code, _, _ = run_cli(capsys, "check", "bogus", "conj6", "--budget", "max-order=10")
        assert code == 2
    finally:
        del CHECKERS["bogus"]


def test_check_json_schema(capsys):
    code, out, _ = run_cli(capsys, "check", "pm", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    (report,) = payload["reports"]
    assert report["id"] == "pm"
    assert report["status"] == "consistent"
    assert set(report) == {"id", "params", "status", "verified", "counterexamples", "artifacts", "notes"}
    # polynomials serialize as coefficient arrays of fraction strings
    assert report["artifacts"]["p_m[m=2]"] == ["1", "1"]
    assert report["artifacts"]["p_m[m=3]"] == ["1", "13/6", "3/2", "1/3"]


def test_check_csv_format(capsys):
    code, out, _ = run_cli(capsys, "check", "thm2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "id,status,verified,counterexamples,notes"
    assert lines[1].startswith("thm2,consistent,")


def test_check_output_deterministic(capsys):
    first = run_cli(capsys, "check", "conj7", "--format", "json")
    second = run_cli(capsys, "check", "conj7", "--format", "json")
    assert first == second


def test_budget_parsing():
    assert cli._parse_budget("default") == Budget()
    assert cli._parse_budget("quick") == Budget(max_order=40)
    assert cli._parse_budget("max-order=33,truncation=20") == Budget(max_order=33, truncation=20)
    with pytest.raises(ValueError):
        cli._parse_budget("bogus=1")


def test_table_command(capsys):
    code, out, err = run_cli(capsys, "table", "conj6-degrees", "--budget", "max-order=80")
    assert code == 0
    assert "j=2" in out and "| 9" in out and "10" in out
    assert "disagree" not in err

    code, _, err = run_cli(capsys, "table", "nosuch")
    assert code == 64 and "unknown table" in err


def test_table_renders_mismatches_inline(capsys, monkeypatch):
    monkeypatch.setitem(
        __import__("catalan_hankel.refdata", fromlist=["x"]).EVEN_DEGREE_TABLE, 6, [4]
    )
    code, out, err = run_cli(capsys, "table", "conj6-degrees", "--budget", "max-order=40")
    assert code == 0
    assert "3 (ref 4)" in out
    assert "1 cell(s) disagree" in err


def test_table_csv_and_json(capsys):
    code, out, _ = run_cli(capsys, "table", "conj13-B", "--format", "csv", "--budget", "max-order=60")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "row,j,computed,expected,match"
    assert "5,2,-1,-1,true" in lines

    code, out, _ = run_cli(capsys, "table", "conj13-B", "--format", "json", "--budget", "max-order=60")
    payload = json.loads(out)
    assert payload["table"] == "conj13-B"
    cell = next(c for c in payload["cells"] if c["row"] == 5 and c["j"] == 2)
    assert cell == {"row": 5, "j": 2, "computed": "-1", "expected": "-1", "match": True}


def test_gf_command(capsys):
    code, out, _ = run_cli(capsys, "gf", "--parity", "even", "-k", "1", "-m", "3")
    assert code == 0
    assert "numerator: 1 7 7 1" in out
    assert "class: palindromic" in out

    code, out, _ = run_cli(capsys, "gf", "--parity", "even", "-k", "2", "-m", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["numerator"] == ["1", "4", "0", "-4", "-1"]
    assert payload["degree"] == 4
    assert payload["palindrome_class"] == "skew-palindromic"

    code, _, err = run_cli(capsys, "gf", "--parity", "even", "-k", "2", "-m", "-2")
    assert code == 64 and "-m must be" in err


def test_cache_roundtrip(capsys, tmp_path):
    path = tmp_path / "dets.tsv"
    code, out_first, _ = run_cli(capsys, "det", "-k", "3", "-m", "1", "-N", "10", "--cache", str(path))
    assert code == 0
    stored = read_records(str(path))
    assert len(stored.entries) == 10 and not stored.corrupt_lines

    # a second run reuses the cache and prints identical output
    code, out_second, _ = run_cli(capsys, "det", "-k", "3", "-m", "1", "-N", "10", "--cache", str(path))
    assert code == 0 and out_second == out_first
    assert len(read_records(str(path)).entries) == 10  # nothing re-appended

    code, out, _ = run_cli(capsys, "cache", "load", "--cache", str(path))
    assert code == 0 and "loaded 10 record(s)" in out

    code, out, _ = run_cli(capsys, "cache", "verify", "--cache", str(path))
    assert code == 0 and "all match" in out


def test_cache_detects_tampering(capsys, tmp_path):
    path = tmp_path / "dets.tsv"
    run_cli(capsys, "det", "-k", "3", "-m", "1", "-N", "10", "--cache", str(path))
    lines = path.read_text().splitlines()
    tampered = ["\t".join(line.split("\t")[:4] + ["999"]) for line in lines]
    path.write_text("\n".join(tampered) + "\n")
    code, out, _ = run_cli(capsys, "cache", "verify", "--cache", str(path))
    assert code == 1 and "DIVERGENT" in out


def test_cache_skips_corrupt_records(capsys, tmp_path):
    path = tmp_path / "dets.tsv"
    run_cli(capsys, "det", "-k", "1", "-m", "0", "-N", "4", "--cache", str(path))
    with open(path, "a") as handle:
        handle.write("not a record\n")
        handle.write("catalan\t1\t0\tbroken\t5\n")
    code, out, err = run_cli(capsys, "cache", "load", "--cache", str(path))
    assert code == 0
    assert "loaded 4 record(s), skipped 2" in out
    assert err.count("corrupt cache record skipped") == 2


def test_cache_path_from_environment(capsys, tmp_path, monkeypatch):
    path = tmp_path / "env.tsv"
    monkeypatch.setenv("CATALAN_HANKEL_CACHE", str(path))
    code, _, _ = run_cli(capsys, "det", "-k", "1", "-N", "3")
    assert code == 0 and path.exists()
    monkeypatch.delenv("CATALAN_HANKEL_CACHE")
    code, _, err = run_cli(capsys, "cache", "verify")
    assert code == 64 and "no cache path" in err


def test_check_honors_preloaded_cache_values(capsys, tmp_path):
    # a poisoned cache record propagates into the checker: loads are trusted
    path = tmp_path / "dets.tsv"
    path.write_text("catalan\t1\t0\t3\t7\n")
    code, _, _ = run_cli(capsys, "check", "pm", "--cache", str(path))
    assert code == 2  # the unit determinant can no longer match


def test_jobs_flag_keeps_output_identical(capsys):
    serial = run_cli(capsys, "det", "-k", "2", "-m", "-1", "-N", "14", "--jobs", "1")
    parallel = run_cli(capsys, "det", "-k", "2", "-m", "-1", "-N", "14", "--jobs", "4")
    assert serial == parallel


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "catalan_hankel.cli", "seq", "-k", "1", "-N", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 1 2 5\n"


def test_version_flag():
    proc = subprocess.run(
        [sys.executable, "-m", "catalan_hankel.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "catalan-hankel" in proc.stdout
