import json
import subprocess
import sys

from qsphere.cli import main


def test_pass_run_writes_report(tmp_path):
    out = tmp_path / "report.json"
    rc = main(["verify", "delta-inv", "--n", "2", "--max-deg", "2", "--out", str(out)])
    assert rc == 0
    blob = json.loads(out.read_text())
    assert blob["suite"] == "delta-inv"
    assert all(c["status"] == "pass" for c in blob["checks"])


def test_stdout_report(capsys):
    rc = main(["verify", "serre-radical", "--n", "2", "--max-deg", "4"])
    assert rc == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["suite"] == "serre-radical"


def test_unknown_suite_is_usage_error():
    assert main(["verify", "nonsense"]) == 2


def test_delta_suite_needs_rank_two():
    assert main(["verify", "star", "--n", "1"]) == 2
    assert main(["verify", "xyz", "--n", "2"]) == 2


def test_mode_mismatch_is_usage_error():
    assert main(["verify", "factorization", "--mode", "generic"]) == 2
    assert main(["verify", "serre-radical", "--mode", "specialized"]) == 2


def test_bad_numeric_point_is_usage_error():
    assert main(["verify", "irreducibility", "--v", "1"]) == 2
    assert main(["verify", "irreducibility", "--v", "0"]) == 2


def test_sigma_flag_single_branch(tmp_path):
    out = tmp_path / "r.json"
    rc = main(["verify", "harish", "--n", "2", "--max-deg", "1", "--sigma", "-1", "--out", str(out)])
    assert rc == 0
    blob = json.loads(out.read_text())
    assert blob["mode"] == "specialized(sigma=-1)"
    assert all("sigma=-1" in c["name"] for c in blob["checks"])


def test_env_override(tmp_path, monkeypatch):
    out = tmp_path / "r.json"
    monkeypatch.setenv("QSPHERE_MAX_DEG", "1")
    monkeypatch.setenv("QSPHERE_SIGMA", "+1")
    rc = main(["verify", "harish", "--n", "2", "--out", str(out)])
    assert rc == 0
    blob = json.loads(out.read_text())
    assert blob["params"]["max_deg"] == 1
    assert blob["mode"] == "specialized(sigma=+1)"


def test_console_entry_point_exists():
    proc = subprocess.run(
        [sys.executable, "-m", "qsphere.cli", "verify", "delta-inv", "--n", "2", "--max-deg", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["suite"] == "delta-inv"


def test_oracle_precondition_failure_is_exit_three(monkeypatch):
    import qsphere.suites as suites

    monkeypatch.setitem(suites._GATE_CACHE, 2, False)
    assert main(["verify", "span", "--n", "2", "--max-deg", "1"]) == 3


def test_run_all_skips_dependents_of_a_fatal_suite(tmp_path, monkeypatch):
    import qsphere.suites as suites
    from qsphere.report import VerificationReport

    def failing_serre(**kw):
        rep = VerificationReport("serre-radical", kw, "generic")
        rep.record("forced", False, "forced failure")
        return rep

    monkeypatch.setitem(suites.SUITES, "serre-radical", failing_serre)
    out = tmp_path / "all.json"
    rc = main(["verify", "all", "--n", "2", "--max-deg", "1", "--out", str(out)])
    assert rc == 1
    blob = json.loads(out.read_text())
    by_name = {c["name"]: c for c in blob["checks"]}
    assert by_name["suite:serre-radical"]["status"] == "fail"
    for dependent in ("suite:span", "suite:normalizer", "suite:f-inverse"):
        assert by_name[dependent]["status"] == "fail"
        assert "not run" in by_name[dependent]["witness"]


def test_run_all_aggregate_small(tmp_path):
    out = tmp_path / "all.json"
    rc = main(
        ["verify", "all", "--n", "2", "--max-deg", "2", "--out", str(out)]
    )
    assert rc == 0
    blob = json.loads(out.read_text())
    assert blob["suite"] == "all"
    names = [c["name"] for c in blob["checks"]]
    assert names[0] == "suite:serre-radical"
    assert len(names) == 12
    assert all(c["status"] == "pass" for c in blob["checks"])
