import json
import subprocess
import sys

import pytest

from reesaci.cli import main
from reesaci.groebner import Caps
from reesaci.instance import InstanceError, validate_instance
from reesaci.report import (
    EXIT_CAPPED,
    EXIT_CLAIM_FAILED,
    EXIT_INVALID,
    EXIT_OK,
    AnalysisReport,
    Options,
    analyze,
    default_suite,
    load_suite,
    run_suite,
    saturation_exponent_bound,
    suite_exit_code,
)


def spec(a, b):
    return validate_instance(len(a), a, b)


@pytest.fixture(scope="module")
def report111():
    return analyze(spec((3, 3, 3), (1, 1, 1)))


def test_analyze_b111(report111):
    r = report111
    assert r.numbers["relType"] == 3
    assert r.numbers["reductionNumber"] == 2
    assert r.numbers["multiplicityComputed"] == 13
    assert r.homology["acm"] and r.numbers["fiberPrincipal"] and r.basis["minimal"]
    assert r.numbers["socleDegree"] == 3 and r.numbers["secondaryEliminationDegree"] == 4
    assert r.numbers["saturationExponentObserved"] == 2
    assert r.exit_code == EXIT_OK
    assert all(v is True for v in r.checks.values())


def test_analyze_not_minimal():
    r = analyze(spec((3, 3, 3), (0, 1, 1)))
    assert r.basis["minimal"] is False and r.basis["minimalPredicted"] is False
    assert r.exit_code == EXIT_OK


def test_analyze_b112():
    r = analyze(spec((4, 4, 4), (1, 1, 2)))
    assert r.numbers["relType"] == 4
    assert r.numbers["saturationExponentBound"] == 2
    assert r.exit_code == EXIT_OK


def test_saturation_bound_formula():
    assert saturation_exponent_bound(spec((3, 3, 3), (1, 1, 1))) == 2
    assert saturation_exponent_bound(spec((5, 5, 5), (1, 2, 2))) == 3


def test_report_invariants(report111):
    r = report111
    assert r.homology["acm"] == (r.homology["depthIniL"] >= 3)
    assert r.numbers["relType"] == r.basis["maxXtildeDegree"]


def test_report_is_deterministic(report111):
    again = analyze(spec((3, 3, 3), (1, 1, 1)))
    assert again.to_json() == report111.to_json()
    assert "timings" not in json.loads(report111.to_json())
    assert "timings" in json.loads(report111.to_json(with_timings=True))


def test_caps_mark_report_partial():
    r = analyze(spec((3, 3, 3), (1, 1, 1)), Options(caps=Caps(max_spairs=3)))
    assert r.capped and r.exit_code == EXIT_CAPPED
    assert r.checks["basis_shape"] is None
    assert r.diagnostics["capsHit"]


def test_skip_stage():
    r = analyze(spec((3, 3, 3), (1, 1, 1)), Options(skip=frozenset({"homology"})))
    assert r.homology == {}
    assert "depth_chain" not in r.checks and "sym_algebra_cm" not in r.checks
    assert not r.diagnostics["warnings"] and r.exit_code == EXIT_OK


def test_exit_code_precedence():
    r = AnalysisReport(instance={})
    r.checks["x"] = False
    r.diagnostics["capsHit"].append("basis: cap")
    assert r.exit_code == EXIT_CLAIM_FAILED
    results = [{"exitCode": EXIT_CAPPED}, {"exitCode": EXIT_INVALID}, {"exitCode": EXIT_OK}]
    assert suite_exit_code(results) == EXIT_INVALID
    assert suite_exit_code(results + [{"exitCode": EXIT_CLAIM_FAILED}]) == EXIT_CLAIM_FAILED
    assert suite_exit_code([]) == EXIT_OK


def test_validation_propagates():
    with pytest.raises(InstanceError):
        validate_instance(3, (3, 3, 3), (0, 0, 1))


def test_default_suite_size():
    suite = default_suite()
    assert len(suite) == 2500
    assert sum(1 for e in suite if sum(e["b"]) <= min(e["a"])) == 495


def test_run_suite_mixed():
    entries = [
        {"m": 3, "a": [3, 3, 3], "b": [1, 1, 1]},
        {"m": 3, "a": [3, 3, 3], "b": [0, 0, 1]},
        {"a": [3, 3, 3], "b": [0, 1, 1], "checks": {"homology": False}},
    ]
    summary, results = run_suite(entries)
    assert summary == {"instances": 3, "passed": 2, "failed": 0, "capped": 0, "invalid": 1, "exitCode": EXIT_INVALID}
    assert [r["status"] for r in results] == ["passed", "invalid", "passed"]
    assert results[2]["report"]["homology"] == {}


def test_run_suite_empty():
    summary, results = run_suite([])
    assert summary["instances"] == 0 and summary["exitCode"] == EXIT_OK and results == []


def test_run_suite_caps_override():
    summary, results = run_suite([{"a": [3, 3, 3], "b": [1, 1, 1], "caps": {"max_spairs": 3}}])
    assert summary["capped"] == 1 and summary["exitCode"] == EXIT_CAPPED


def test_run_suite_parallel_is_deterministic():
    entries = default_suite()[:6]
    assert run_suite(entries, jobs=2) == run_suite(entries, jobs=1)


def test_load_suite(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"instances": [{"a": [3, 3, 3], "b": [1, 1, 1]}]}))
    assert load_suite(p) == [{"a": [3, 3, 3], "b": [1, 1, 1]}]
    p.write_text('"nope"')
    with pytest.raises(ValueError):
        load_suite(p)


def test_cli_analyze(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["analyze", "--a", "3,3,3", "--b", "1,1,1", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["numbers"]["multiplicityComputed"] == 13
    assert set(data) == {"instance", "basis", "filtration", "homology", "numbers", "checks", "diagnostics"}


def test_cli_invalid(capsys):
    assert main(["analyze", "--a", "3,3,3", "--b", "0,0,1"]) == EXIT_INVALID
    assert "invalid instance" in capsys.readouterr().err


def test_cli_caps(capsys, monkeypatch):
    assert main(["analyze", "--a", "3,3,3", "--b", "1,1,1", "--max-spairs", "3"]) == EXIT_CAPPED
    monkeypatch.setenv("REES_ACI_CAPS", "max_spairs=3")
    assert main(["analyze", "--a", "3,3,3", "--b", "1,1,1"]) == EXIT_CAPPED


def test_cli_gb(capsys):
    assert main(["gb", "--a", "3,3,3", "--b", "1,1,1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "T1^3*X2 - T2^3*X1" and lines[-1] == "W^3 - X1*X2*X3"
    assert main(["gb", "--a", "3,3,3", "--b", "1,1,1", "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["basis"][-1] == {"lead": [0, 0, 0, 0, 0, 0, 3], "trail": [0, 0, 0, 1, 1, 1, 0]}


def test_cli_suite(tmp_path, capsys):
    p = tmp_path / "s.json"
    p.write_text(json.dumps([{"m": 3, "a": [3, 3, 3], "b": [1, 1, 1]}]))
    out = tmp_path / "o.json"
    assert main(["suite", "--file", str(p), "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["summary"]["passed"] == 1
    p.write_text("{broken")
    assert main(["suite", "--file", str(p)]) == EXIT_INVALID


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "reesaci", "gb", "--a", "2,2,2", "--b", "1,1,0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "X" in proc.stdout
