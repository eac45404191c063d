import json

import pytest

import src.cli.commands as commands
from src.cli import main
from src.verify import Counterexample, ReportDocument, VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestCoeff:
    def test_pbar3_csv(self, capsys):
        code, out = run(capsys, "coeff", "--fn", "op", "--k", "3", "--limit", "7")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,value"
        assert lines[-1] == "7,3648"
        assert len(lines) == 9

    def test_limit_zero(self, capsys):
        code, out = run(capsys, "coeff", "--fn", "op", "--k", "3", "--limit", "0")
        assert code == 0
        assert out == "n,value\n0,1\n"

    def test_sums_of_three_squares(self, capsys):
        code, out = run(capsys, "coeff", "--fn", "rk", "--k", "3", "--limit", "2")
        assert code == 0
        assert out.splitlines()[1:] == ["0,1", "1,6", "2,12"]

    def test_big_integers_are_plain_decimals(self, capsys):
        code, out = run(capsys, "coeff", "--k", "3", "--limit", "400")
        assert code == 0
        last = out.splitlines()[-1].split(",")[1]
        assert last.isdigit() and len(last) > 20

    def test_modular_and_json(self, capsys):
        code, out = run(capsys, "coeff", "--k", "3", "--limit", "14", "--modulus", "64", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["values"][14] == {"n": 14, "value": str(535008 % 64)}

    def test_budget_rejection(self, capsys):
        code, _ = run(capsys, "coeff", "--k", "3", "--limit", "6000")
        assert code == 3

    @pytest.mark.parametrize(
        "argv",
        [
            ["coeff", "--k", "3", "--limit", "-1"],
            ["coeff", "--k", "0", "--limit", "5"],
            ["coeff", "--k", "3"],
            ["coeff", "--fn", "xx", "--limit", "3"],
            ["coeff", "--limit", "3", "--modulus", "1"],
            ["frobnicate"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == 2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, out = run(capsys, "coeff", "--limit", "3", "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text() == "n,value\n0,1\n1,6\n2,24\n3,80\n"


class TestVerify:
    def test_single_check(self, capsys):
        code, out = run(capsys, "verify", "--filter", "T2.9", "--profile", "quick")
        assert code == 0
        assert out.startswith("T2.9")
        assert "pass" in out.splitlines()[0]

    def test_unknown_filter_runs_nothing(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise AssertionError("no computation expected")

        monkeypatch.setattr(commands, "run_registry", boom)
        code, out = run(capsys, "verify", "--filter", "NOSUCH")
        assert code == 2
        assert out == ""

    def test_selection_required(self, capsys):
        assert main(["verify", "--profile", "quick"]) == 2
        assert main(["verify", "--all", "--filter", "T2.9"]) == 2

    def test_failure_exit_code(self, capsys, monkeypatch):
        failing = VerificationReport(
            id="T2.9", status="fail", first_counterexample=Counterexample(n=4, observed=32, expected=0)
        )
        monkeypatch.setattr(commands, "run_registry", lambda *a, **k: [failing])
        code, out = run(capsys, "verify", "--filter", "T2.9")
        assert code == 1
        assert "n=4 observed=32 expected=0" in out

    def test_json_document(self, capsys):
        code, out = run(capsys, "verify", "--filter", "TIGHT.2.8,T2.8", "--profile", "quick", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert doc["profile"] == "quick"
        assert [r["id"] for r in doc["reports"]] == ["T2.8", "TIGHT.2.8"]
        tight = doc["reports"][1]
        assert tight["status"] == "pass"
        assert tight["first_counterexample"] == {"n": 0, "observed": 32, "expected": 0}
        assert set(tight) >= {"id", "status", "checked_count", "bound", "first_counterexample", "elapsed_ms"}

    def test_output_is_deterministic(self, capsys):
        _, first = run(capsys, "verify", "--filter", "T2.7.*", "--profile", "quick", "--format", "json")
        _, second = run(capsys, "verify", "--filter", "T2.7.*", "--profile", "quick", "--format", "json")
        assert first == second


class TestListAndReport:
    def test_list_contains_anchor(self, capsys):
        code, out = run(capsys, "list")
        assert code == 0
        line = next(l for l in out.splitlines() if l.startswith("T3.7 "))
        assert "(mod 144)" in line

    def test_list_json(self, capsys):
        code, out = run(capsys, "list", "--filter", "T4.6*", "--format", "json")
        assert code == 0
        assert [c["id"] for c in json.loads(out)["checks"]] == ["T4.6", "T4.6.1", "T4.6.2", "T4.6.3"]

    def test_merge_zero_files(self, capsys):
        code, out = run(capsys, "report", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"] == {"total": 0, "passed": 0, "failed": 0, "skipped": 0, "info": 0}
        assert doc["reports"] == []

    def test_larger_bound_wins(self, capsys, tmp_path):
        quick = ReportDocument(profile="quick", reports=[
            VerificationReport(id="T4.3", status="skipped-budget"),
            VerificationReport(id="T2.9", status="pass", bound=624),
        ])
        deep = ReportDocument(profile="deep", reports=[
            VerificationReport(id="T4.3", status="pass", bound=6),
        ])
        paths = []
        for name, doc in (("quick.json", quick), ("deep.json", deep)):
            path = tmp_path / name
            path.write_text(json.dumps(doc.to_dict()))
            paths.append(str(path))
        code, out = run(capsys, "report", *paths, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert {r["id"]: r["status"] for r in doc["reports"]} == {"T2.9": "pass", "T4.3": "pass"}
        assert doc["summary"]["passed"] == 2

    def test_verify_output_round_trips_through_report(self, capsys, tmp_path):
        path = tmp_path / "run.json"
        assert main(["verify", "--filter", "T2.7.1", "--profile", "quick", "--format", "json", "-o", str(path)]) == 0
        original = json.loads(path.read_text())
        code, out = run(capsys, "report", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["reports"] == original["reports"]

    def test_unreadable_file(self, capsys, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        assert main(["report", str(broken)]) == 2
        assert main(["report", str(tmp_path / "missing.json")]) == 2


def _doc(*reports):
    return ReportDocument(profile="quick", reports=list(reports))


class TestMergeRule:
    def test_ran_beats_skipped_on_equal_bound(self):
        ran = VerificationReport(id="T2.8", status="pass", bound=0)
        skipped = VerificationReport(id="T2.8", status="skipped-budget")
        assert commands.merge_reports([_doc(ran), _doc(skipped)])[0].status == "pass"
        assert commands.merge_reports([_doc(skipped), _doc(ran)])[0].status == "pass"

    def test_bound_zero_beats_no_bound(self):
        zero = VerificationReport(id="T4.1", status="pass", bound=0)
        none = VerificationReport(id="T4.1", status="info")
        assert commands.merge_reports([_doc(zero), _doc(none)])[0].bound == 0

    def test_later_file_wins_full_tie(self):
        first = VerificationReport(id="T2.9", status="pass", bound=61)
        second = VerificationReport(
            id="T2.9", status="fail", bound=61, first_counterexample=Counterexample(n=3, observed=1, expected=0)
        )
        assert commands.merge_reports([_doc(first), _doc(second)])[0].status == "fail"

    def test_larger_checked_bound_wins_regardless_of_order(self):
        quick = VerificationReport(id="T3.7", status="pass", bound=61)
        deep = VerificationReport(id="T3.7", status="pass", bound=300)
        assert commands.merge_reports([_doc(deep), _doc(quick)])[0].bound == 300
