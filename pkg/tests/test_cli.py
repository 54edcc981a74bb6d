import json
import subprocess
import sys
from pathlib import Path

import pytest

from overdurfee import cli
from overdurfee.cli import main
from overdurfee.components.verification import VerificationReport
from overdurfee.utils.errors import InvariantViolation
from overdurfee.utils.constants import MAX_ORDER_ENV_VAR


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    @pytest.mark.parametrize("argv, expected", [
        (("count", "pbar", "--n", "4"), "14\n"),
        (("count", "pbar", "--n", "0"), "1\n"),
        (("count", "p", "--n", "10"), "42\n"),
        (("count", "g", "--n", "5"), "8\n"),
        (("count", "dki", "--n", "3", "--k", "2", "--i", "2"), "4\n"),
        (("count", "dkk", "--n", "3", "--k", "3"), "6\n"),
        (("count", "squares", "--n", "3", "--j", "1"), "4\n"),
    ])
    def test_values(self, capsys, argv, expected):
        assert run(capsys, *argv)[:2] == (0, expected)

    def test_json(self, capsys):
        code, out, _ = run(capsys, "count", "pbar", "--n", "4", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"kind": "pbar", "params": {"n": 4}, "count": "14"}

    @pytest.mark.parametrize("argv", [
        ("count", "dki", "--n", "3", "--k", "2"),
        ("count", "dki", "--n", "3", "--k", "2", "--i", "3"),
        ("count", "pbar", "--n", "-1"),
        ("count", "pbar"),
        ("count", "nope", "--n", "1"),
    ])
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    def test_error_prefix(self, capsys):
        code, out, err = run(capsys, "count", "squares", "--n", "3", "--j", "0")
        assert code == 2
        assert out == ""
        assert "error:" in err


class TestSeries:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "series", "overpartitions-product", "--order", "5")
        assert code == 0
        assert out == "0\t1\n1\t2\n2\t4\n3\t8\n4\t14\n5\t24\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "series", "dkk", "--k", "2", "--order", "3", "--format", "json")
        assert code == 0
        assert json.loads(out) == ["1", "2", "2", "4"]

    def test_order_zero(self, capsys):
        assert run(capsys, "series", "partitions", "--order", "0")[:2] == (0, "0\t1\n")

    def test_refined(self, capsys):
        code, out, _ = run(capsys, "series", "durfee-refined", "--N", "2", "--order", "3")
        assert code == 0
        assert out == "3\t1\t1\n3\t2\t1\n"

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "series", "g", "--order", "2", "--format", "csv")
        assert code == 0
        assert out == "n,coefficient\n0,1\n1,2\n2,2\n"

    def test_order_cap(self, capsys, monkeypatch):
        monkeypatch.setenv(MAX_ORDER_ENV_VAR, "5")
        assert run(capsys, "series", "partitions", "--order", "6")[0] == 2
        assert run(capsys, "series", "partitions", "--order", "5")[0] == 0

    def test_missing_k(self, capsys):
        assert run(capsys, "series", "dkk", "--order", "3")[0] == 2


class TestMap:
    def test_thm21_forward(self, capsys):
        code, out, _ = run(capsys, "map", "thm21-forward", "--gamma", "7,6,5,2,1", "--delta", "4,3,0")
        assert (code, out) == (0, "6o,5o,7,5,5\n")

    def test_thm21_inverse(self, capsys):
        code, out, _ = run(capsys, "map", "thm21-inverse", "--op", "6o,5o,7,5,5")
        assert (code, out) == (0, "gamma=7,6,5,2,1 delta=4,3,0\n")

    @pytest.mark.parametrize("op, image", [("1,1,1", "3\n"), ("3", "3\n")])
    def test_phi(self, capsys, op, image):
        assert run(capsys, "map", "phi", "--op", op, "--k", "2")[:2] == (0, image)

    def test_phi_json(self, capsys):
        code, out, _ = run(capsys, "map", "phi", "--op", "1o,1,1", "--k", "2", "--format", "json")
        assert code == 0
        assert json.loads(out) == [{"v": 3, "o": True}]

    def test_phi_trace(self, capsys):
        code, out, _ = run(capsys, "map", "phi", "--op", "1,1,1", "--k", "2", "--trace")
        assert code == 0
        assert "below_conjugate" in out
        assert out.rstrip().endswith("3")

    @pytest.mark.parametrize("argv", [
        ("map", "phi", "--op", "2o,2o", "--k", "2"),
        ("map", "phi", "--op", "3"),
        ("map", "thm21-inverse", "--op", "1,1"),
        ("map", "thm21-forward", "--gamma", "3,3", "--delta", "0"),
    ])
    def test_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestDissect:
    def test_first_figure(self, capsys):
        code, out, _ = run(capsys, "dissect", "7,6,6,5o,3o,3,2,1o")
        assert code == 0
        assert out.splitlines()[0] == "sizes: (6,2)"
        assert "level 2: 3,2" in out
        assert "|" in out

    def test_second_figure_json(self, capsys):
        code, out, _ = run(capsys, "dissect", "8,7o,6,6,5o,5,5,3,1o", "--format", "json")
        assert code == 0
        assert json.loads(out)["sizes"] == [6, 3]

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "dissect", "")
        assert (code, out) == (0, "sizes: ()\n")

    def test_parse_error(self, capsys):
        assert run(capsys, "dissect", "2o,2o")[0] == 2


class TestFibers:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "fibers", "--n", "3", "--k", "2", "--format", "json")
        assert code == 0
        assert [row["fiber_count"] for row in json.loads(out)] == [3, 3, 1, 1]

    def test_single(self, capsys):
        code, out, _ = run(capsys, "fibers", "--beta", "3", "--k", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["fiber_count"] == 3
        assert data["literal_weight"] == "4"

    def test_needs_target(self, capsys):
        assert run(capsys, "fibers", "--k", "2")[0] == 2


class TestVerify:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "eq4", "--max-n", "10")
        assert code == 0
        assert out.startswith("eq4 max_n=10: PASS")

    def test_json_is_deterministic(self, capsys):
        first = run(capsys, "verify", "thm22", "--max-n", "6", "--k", "2", "--format", "json")
        second = run(capsys, "verify", "thm22", "--max-n", "6", "--k", "2", "--format", "json")
        assert first[0] == second[0] == 0
        assert first[1] == second[1]
        data = json.loads(first[1])
        assert data["passed"] is True
        assert data["rows"][3]["actual"] == "4"
        assert "elapsed" not in data

    def test_weighted_reports_disagreements(self, capsys):
        code, out, _ = run(capsys, "verify", "weighted", "--max-n", "4", "--k", "2", "--format", "json")
        assert code == 0
        assert json.loads(out)["details"]["literal_weight_disagreements"]

    def test_failed_suite_exits_1(self, capsys, monkeypatch):
        failed = VerificationReport("eq4", {"max_n": 1}, [{"n": 0, "ok": True}, {"n": 1, "ok": False}], False, 0.0)
        monkeypatch.setattr(cli, "run_identity", lambda *args, **kwargs: failed)
        code, out, _ = run(capsys, "verify", "eq4", "--max-n", "1")
        assert code == 1
        assert out.startswith("eq4 max_n=1: FAIL")

    def test_jobs(self, capsys):
        assert run(capsys, "verify", "eq5", "--max-n", "5", "--k", "2", "--i", "1", "--jobs", "2")[0] == 0

    @pytest.mark.parametrize("argv", [
        ("verify", "eq5", "--max-n", "5", "--i", "1"),
        ("verify", "eq4", "--jobs", "0"),
        ("verify", "nope"),
    ])
    def test_usage(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "pbar.txt"
    code, out, _ = run(capsys, "count", "pbar", "--n", "4", "--out", str(target))
    assert (code, out) == (0, "")
    assert target.read_text(encoding="utf-8") == "14\n"


def test_no_command(capsys):
    assert run(capsys)[0] == 2


def test_invariant_violation_exits_1(capsys, monkeypatch):
    def broken(op, k):
        raise InvariantViolation("square count changed")

    monkeypatch.setattr(cli, "phi_trace", broken)
    code, out, err = run(capsys, "map", "phi", "--op", "1,1,1", "--k", "2")
    assert (code, out) == (1, "")
    assert "square count changed" in err


def test_command_line_skips_plotting_libraries():
    check = ("import sys, overdurfee.cli; "
             "print('matplotlib.pyplot' in sys.modules, 'graphviz' in sys.modules)")
    result = subprocess.run([sys.executable, "-c", check], capture_output=True, text=True,
                            cwd=Path(__file__).resolve().parents[1], check=True)
    assert result.stdout.split() == ["False", "False"]
