import json
import subprocess
import sys
from fractions import Fraction

import pytest

from horadam.cli import main, run_bench
from horadam.engine import RecurrenceSpec
from horadam.errors import IdentityViolation

from oracles import term


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_examples(capsys):
    assert run(capsys, "eval", "--seq", "fibonacci", "-n", "-7") == (0, "13\n", "")
    assert term(1, 1, 0, 1, -7) == 13
    code, out, _ = run(capsys, "eval", "--f", "1", "--g", "1", "--h", "0", "--k", "1",
                       "-n", "10", "--method", "binet")
    assert (code, out) == (0, "55\n")


def test_eval_auto_with_checks(capsys):
    code, out, _ = run(capsys, "eval", "--seq", "pell", "-n", "6", "--method", "auto", "--check")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "70" and lines[1] == "case: NonDegenerate"
    assert "DISAGREES" not in out and out.count("agrees") == 3


def test_eval_rational_and_polynomial(capsys):
    code, out, _ = run(capsys, "eval", "--f", "1/2", "--g", "-3", "--h", "1", "--k", "2/3", "-n", "4")
    assert code == 0 and out.strip() == "19/3"
    assert term(Fraction(1, 2), -3, 1, Fraction(2, 3), 4) == Fraction(19, 3)
    code, out, _ = run(capsys, "eval", "--f", "3/7", "--g", "-2/5", "--h", "1", "--k", "-4", "-n", "-3")
    assert code == 0 and Fraction(out.strip()) == term(Fraction(3, 7), Fraction(-2, 5), 1, -4, -3)
    code, out, _ = run(capsys, "eval", "--seq", "tchebychev_t", "--x", "1/2", "-n", "3")
    assert (code, out) == (0, "-1\n")
    code, out, _ = run(capsys, "eval", "--f", "[0, 2]", "--g", "-1", "--h", "1", "--k", "[0, 1]",
                       "--x", "3", "-n", "2")
    assert (code, out) == (0, "17\n")


def test_eval_json_schema_and_roundtrip(capsys):
    code, out, _ = run(capsys, "eval", "--seq", "lucas", "-n", "12", "--format", "json")
    record = json.loads(out)
    assert code == 0
    assert record == {"spec": {"f": "1", "g": "1", "h": "2", "k": "1"}, "n": 12,
                      "value": "322", "method": "fast", "case": "NonDegenerate"}
    assert json.dumps(record, indent=2) + "\n" == out


@pytest.mark.parametrize("argv", [
    ["eval", "--seq", "fibonacci", "-n", "300", "--method", "auto", "--check"],
    ["eval", "--f", "3/7", "--g", "-2/5", "--h", "1", "--k", "-4", "-n", "-9"],
    ["table", "--seq", "pell", "--from", "-4", "--to", "4"],
    ["verify", "--suite", "addition", "--trials", "5", "--seed", "3"],
    ["bench", "--seq", "fibonacci", "-n", "50", "--methods", "iter,fast", "--show-value"],
    ["catalog"],
])
def test_json_outputs_roundtrip_bytewise(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_table_examples(capsys):
    code, out, _ = run(capsys, "table", "--seq", "lucas", "--from", "0", "--to", "5", "--format", "csv")
    assert code == 0
    assert [row.split(",")[1] for row in out.splitlines()[1:]] == ["2", "1", "3", "4", "7", "11"]
    code, out, _ = run(capsys, "table", "--seq", "fibonacci", "--from", "-3", "--to", "3")
    assert out.split() == ["2", "-1", "1", "0", "1", "1", "2"]
    assert run(capsys, "table", "--seq", "fibonacci", "--from", "0", "--to", "0")[1] == "0\n"


def test_table_json_values_are_strings(capsys):
    _, out, _ = run(capsys, "table", "--seq", "fibonacci", "--from", "99", "--to", "100",
                    "--format", "json")
    rows = json.loads(out)
    assert [r["value"] for r in rows] == ["218922995834555169026", "354224848179261915075"]


def test_table_bad_range(capsys):
    code, _, err = run(capsys, "table", "--seq", "fibonacci", "--from", "3", "--to", "1")
    assert code == 2 and "--from" in err


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cassini", "--trials", "200", "--seed", "42",
                       "--nmax", "10")
    assert code == 0 and "100.0%" in out and "all suites passed" in out
    code, out, _ = run(capsys, "verify", "--suite", "sums", "--trials", "200", "--seed", "7")
    assert code == 0 and "PASS" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--trials", "50", "--seed", "1",
                       "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert {s["suite"] for s in report["suites"]} == {
        "lemma21", "cassini", "closed_forms", "binet", "corollary", "diag", "sums", "addition"}


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--suite", "all", "--trials", "10", "--seed", "99", "--format", "json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_bench_examples(capsys):
    code, out, _ = run(capsys, "bench", "--seq", "fibonacci", "-n", "100000",
                       "--methods", "iter,fast", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert [r["digits"] for r in report["results"]] == [20899, 20899]
    fast = report["results"][1]
    assert fast["matrix_mults"] <= 2 * 17 + 2
    code, out, _ = run(capsys, "bench", "--seq", "fibonacci", "-n", "0", "--methods", "iter,fast",
                       "--show-value")
    assert code == 0 and out.splitlines()[-1] == "0"


def test_bench_skips_inapplicable_method(capsys):
    code, out, _ = run(capsys, "bench", "--f", "2", "--g", "-1", "--h", "1", "--k", "3", "-n", "10",
                       "--methods", "fast,binet", "--format", "json")
    rows = json.loads(out)["results"]
    assert code == 0
    assert rows[1]["status"] == "skipped" and "DegenerateDiscriminant" in rows[1]["reason"]


def test_bench_disagreement_is_failure(monkeypatch):
    import horadam.cli as cli
    original = cli._evaluate

    def broken(method, spec, n, stats=None):
        value = original(method, spec, n, stats)
        return value + 1 if method == "binet" else value

    monkeypatch.setattr(cli, "_evaluate", broken)
    with pytest.raises(IdentityViolation):
        run_bench(RecurrenceSpec(1, 1, 0, 1), 20, ["fast", "binet"])


def test_usage_errors(capsys):
    code, _, err = run(capsys, "eval", "--seq", "tchebychev_t", "-n", "3")
    assert code == 2 and "--x" in err
    code, _, err = run(capsys, "eval", "--seq", "fibonacci", "--f", "2", "-n", "3")
    assert code == 2
    code, _, err = run(capsys, "eval", "--f", "1", "--g", "1", "--h", "0", "-n", "3")
    assert code == 2
    code, _, err = run(capsys, "eval", "--seq", "tribonacci", "-n", "3")
    assert code == 2 and "UnknownSequenceError" in err
    code, _, err = run(capsys, "eval", "--f", "0", "--g", "1", "--h", "0", "--k", "1", "-n", "3")
    assert code == 2 and "DegenerateSpecError" in err
    code, _, err = run(capsys, "eval", "--f", "2", "--g", "-1", "--h", "1", "--k", "3",
                       "-n", "3", "--method", "binet")
    assert code == 2 and "DegenerateDiscriminantError" in err


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "name,f,g,h,k,symbolic" and len(lines) == 12
    assert "tchebychev_t,2*x,-1,1,x,True" in lines


def test_module_entry_point_exit_status():
    ok = subprocess.run([sys.executable, "-m", "horadam", "eval", "--seq", "fibonacci", "-n", "20"],
                        capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout == "6765\n"
    bad = subprocess.run([sys.executable, "-m", "horadam", "eval", "--seq", "lucas_poly", "-n", "2"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
