import csv
import io
import json

import pytest

import divwalk.cli
from divwalk import Side, init_anchor, verify_range
from divwalk.cli import Y_FULL_RANGE_LIMIT, run_cli
from divwalk.verify import RangeSummary, VerifyReport, CheckFailure


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_factor_21(capsys):
    code, out, err = run(capsys, "factor", "--n", "21")
    assert (code, out, err) == (0, "3 x 7\n1 x 21\n", "")


def test_factor_prime(capsys):
    code, out, _ = run(capsys, "factor", "--n", "97")
    assert code == 0 and out == "prime\n"


def test_factor_one(capsys):
    # n=1 has only the trivial pair and is not prime
    code, out, _ = run(capsys, "factor", "--n", "1")
    assert code == 0 and out == "1 x 1\n"


def test_factor_first_only(capsys):
    assert run(capsys, "factor", "--n", "21", "--first-only") == (0, "3\n", "")
    assert run(capsys, "factor", "--n", "97", "--first-only") == (0, "prime\n", "")
    assert run(capsys, "factor", "--n", "8", "--first-only") == (0, "2\n", "")


def test_factor_first_only_rejects_one(capsys):
    code, out, err = run(capsys, "factor", "--n", "1", "--first-only")
    assert code == 2 and out == "" and err.startswith("error:")


def test_factor_rejects_zero(capsys):
    code, _, err = run(capsys, "factor", "--n", "0")
    assert code == 2 and "error:" in err


def test_residuals_table_frozen(capsys):
    code, out, _ = run(capsys, "residuals", "--n", "21", "--side", "x")
    assert code == 0
    assert out == (
        "k  divisor  residual  quotient  rprime\n"
        "0        4         1         5       1\n"
        "1        3         0         7       3\n"
        "2        2         1        10       7\n"
        "3        1         0        21      13\n"
    )


def test_residuals_csv_frozen(capsys):
    code, out, _ = run(capsys, "residuals", "--n", "21", "--side", "y", "--to", "4",
                       "--format", "csv")
    assert code == 0
    assert out == (
        "k,divisor,residual,quotient,rprime\n"
        "0,5,1,4,1\n"
        "1,6,3,3,3\n"
        "2,7,0,3,7\n"
        "3,8,5,2,13\n"
        "4,9,3,2,21\n"
    )


def test_residuals_json_roundtrip(capsys):
    code, out, _ = run(capsys, "residuals", "--n", "21", "--side", "x",
                       "--format", "json")
    assert code == 0 and out.endswith("\n")
    doc = json.loads(out)
    assert list(doc) == ["n", "side", "rows"]
    assert doc["n"] == 21 and doc["side"] == "x"
    assert doc["rows"][1] == {"k": 1, "divisor": 3, "residual": 0,
                              "quotient": 7, "rprime": 3}
    assert len(doc["rows"]) == 4


def test_residuals_csv_matches_library(capsys):
    code, out, _ = run(capsys, "residuals", "--n", "360", "--side", "y",
                       "--format", "csv", "--to", "50")
    assert code == 0
    anchor = init_anchor(360)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 51
    for row in rows:
        k = int(row["k"])
        assert int(row["divisor"]) == anchor.y0 + k
        assert int(row["residual"]) == 360 % (anchor.y0 + k)
        assert int(row["quotient"]) == 360 // (anchor.y0 + k)


def test_residuals_clamping(capsys):
    code, out, _ = run(capsys, "residuals", "--n", "21", "--side", "x",
                       "--from", "-5", "--to", "99", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 5  # header + k 0..3


def test_residuals_empty_window_rejected(capsys):
    code, _, err = run(capsys, "residuals", "--n", "21", "--side", "x",
                       "--from", "3", "--to", "1")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "residuals", "--n", "21", "--side", "x",
                       "--from", "50")
    assert code == 2 and "error:" in err


def test_residuals_rejects_zero(capsys):
    code, _, err = run(capsys, "residuals", "--n", "0", "--side", "x")
    assert code == 2 and "error:" in err


def test_y_full_range_refused_without_bound(capsys):
    n = str(Y_FULL_RANGE_LIMIT + 1)
    code, _, err = run(capsys, "residuals", "--n", n, "--side", "y")
    assert code == 2 and "--to" in err
    code, out, _ = run(capsys, "residuals", "--n", n, "--side", "y",
                       "--to", "3", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 5


def test_large_n_x_side_is_instant(capsys):
    n = 2**63 - 1
    code, out, _ = run(capsys, "residuals", "--n", str(n), "--side", "x",
                       "--to", "2", "--format", "csv")
    assert code == 0
    anchor = init_anchor(n)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["residual"]) for r in rows] == [
        n % (anchor.x0 - k) for k in range(3)
    ]


def test_factor_large_prime(capsys):
    code, out, _ = run(capsys, "factor", "--n", str(2**31 - 1), "--first-only")
    assert code == 0 and out == "prime\n"


def test_factor_large_even(capsys):
    code, out, _ = run(capsys, "factor", "--n", str(2**62), "--first-only")
    assert code == 0 and out == "2\n"


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--min", "1", "--max", "50")
    assert code == 0
    want = verify_range(1, 50).total_checks
    assert out == f"verify n in [1, 50] mode=both: {want} checks, 0 failures\n"


def test_verify_text_deterministic(capsys):
    first = run(capsys, "verify", "--min", "99", "--max", "101")
    second = run(capsys, "verify", "--min", "99", "--max", "101")
    assert first == second and first[0] == 0


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--min", "99", "--max", "101",
                       "--format", "json")
    assert code == 0
    assert out == ('{"n_min": 99, "n_max": 101, "total_checks": 2727, '
                   '"failures": []}\n')


def test_verify_modes(capsys):
    for mode in ("closed", "recurrence", "both"):
        code, out, _ = run(capsys, "verify", "--min", "21", "--max", "21",
                           "--mode", mode)
        assert code == 0 and f"mode={mode}" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    fail = VerifyReport(7, 3, False, CheckFailure(Side.X, 1, "closed_residual", 0, 2))
    monkeypatch.setattr(
        divwalk.cli._verify,
        "verify_range",
        lambda lo, hi, mode: RangeSummary(lo, hi, 3, (fail,)),
    )
    code, out, _ = run(capsys, "verify", "--min", "7", "--max", "7")
    assert code == 1
    assert "1 failures" in out
    assert "FAIL n=7: side=x k=1 property=closed_residual expected=0 actual=2" in out


def test_verify_bad_range(capsys):
    code, _, err = run(capsys, "verify", "--min", "5", "--max", "2")
    assert code == 2 and "error:" in err


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--n", "1000", "--reps", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,side,method,steps,wall_time_ns,ns_per_step,checksum"
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["method"] for r in rows] == ["generator_stream", "naive_division"] * 2
    assert all(r["n"] == "1000" and r["side"] == "x" and r["steps"] == "31"
               for r in rows)
    assert len({r["checksum"] for r in rows}) == 1


def test_bench_y_side_guard(capsys):
    code, _, err = run(capsys, "bench", "--n", str(Y_FULL_RANGE_LIMIT + 1),
                       "--side", "y")
    assert code == 2 and "error:" in err
    code, out, _ = run(capsys, "bench", "--n", "5000", "--side", "y")
    assert code == 0 and all(r["side"] == "y"
                             for r in csv.DictReader(io.StringIO(out)))


def test_bench_rejects_tiny(capsys):
    code, _, err = run(capsys, "bench", "--n", "1")
    assert code == 2 and "error:" in err


def test_usage_errors(capsys):
    assert run_cli(["residuals", "--n", "abc", "--side", "x"]) == 2
    assert run_cli(["residuals", "--n", "21", "--side", "z"]) == 2
    assert run_cli(["bogus"]) == 2
    assert run_cli(["factor"]) == 2  # --n is required
    assert run_cli(["residuals", "--n", "21", "--side", "x", "--wat"]) == 2
    assert run_cli([]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert run_cli(["--help"]) == 0
    out = capsys.readouterr().out
    assert "residuals" in out and "factor" in out and "verify" in out and "bench" in out
