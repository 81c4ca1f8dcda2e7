"""CLI tests: spec parsing diagnostics, exit codes, golden outputs."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from addca.cli import main
from addca.lca import PropertyReport

SPECS = Path(__file__).resolve().parent.parent / "specs"


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_spec(tmp_path: Path, payload) -> str:
    path = tmp_path / "rule.json"
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(path)


def test_analyze_rule90_text(capsys):
    code, out, err = run_cli(capsys, "analyze", str(SPECS / "rule90.json"))
    assert code == 0 and err == ""
    assert "rule: linear over Z/2, n=1, radius=1" in out
    assert "sensitive: yes" in out
    assert "equicontinuous: no" in out
    assert "injective: no" in out
    assert "surjective: yes" in out
    assert "transitive: yes" in out


def test_analyze_identity_text(capsys):
    code, out, _ = run_cli(capsys, "analyze", str(SPECS / "identity.json"))
    assert code == 0
    assert "equicontinuous: yes" in out
    assert "injective: yes" in out
    assert "transitive: no" in out


def test_analyze_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "analyze", str(SPECS / "rule90.json"),
                           "--format", "json", "--seed", "7")
    assert code == 0
    payload = json.loads(out)
    assert payload["seed"] == 7
    report = PropertyReport.from_dict(payload["report"])
    assert report.to_dict() == payload["report"]
    assert report.sensitive and report.surjective and report.transitive
    assert not report.injective


def test_analyze_additive_spec(capsys):
    code, out, _ = run_cli(capsys, "analyze", str(SPECS / "additive42.json"))
    assert code == 0
    assert "rule: additive over Z/4 x Z/2, radius=0" in out
    # delta_0 = [[1,2],[1,1]] is invertible on Z/4 x Z/2 but has no spatial
    # movement, so the rule is an equicontinuous bijection
    assert "equicontinuous: yes" in out
    assert "injective: yes" in out
    assert "surjective: yes" in out
    assert "transitive: no" in out


def test_simulate_rule90_golden(capsys):
    code, out, _ = run_cli(capsys, "simulate", str(SPECS / "rule90.json"),
                           "--steps", "4", "--window", "4")
    assert code == 0
    assert out.splitlines() == [
        "000010000",
        "000101000",
        "001000100",
        "010101010",
        "100000001",
    ]


def test_simulate_shift_diagonal(capsys):
    code, out, _ = run_cli(capsys, "simulate", str(SPECS / "shift.json"),
                           "--steps", "3", "--window", "3")
    assert code == 0
    assert out.splitlines() == [
        "0003000",
        "0030000",
        "0300000",
        "3000000",
    ]


def test_simulate_json_rows(capsys):
    code, out, _ = run_cli(capsys, "simulate", str(SPECS / "rule90.json"),
                           "--steps", "2", "--window", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"] == ["00100", "01010", "10001"]


def test_simulate_requires_initial(capsys, tmp_path):
    path = write_spec(tmp_path, {"kind": "linear", "m": 4, "n": 1, "radius": 0,
                                 "matrices": [[[1]]]})
    code, _, err = run_cli(capsys, "simulate", path)
    assert code == 2
    assert "initial" in err


def test_charpoly_shear(capsys):
    code, out, _ = run_cli(capsys, "charpoly", str(SPECS / "shear.json"))
    assert code == 0
    # chi = (t-1)^2 = t^2 - 2t + 1 = t^2 + 2t + 1 over Z/4
    assert "chi = t^2 + 2*t + 1" in out
    assert "a_0 = 1" in out
    assert "a_1 = 2" in out
    assert "mod 2: 0 (constant)" in out
    assert "verdict: finite power set" in out


def test_charpoly_rule90_flags_nonconstant_coefficient(capsys):
    code, out, _ = run_cli(capsys, "charpoly", str(SPECS / "rule90.json"),
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["finite"] is False
    assert payload["chi"] == "t + (x + x^-1)"
    a0 = payload["coefficients"][0]
    assert a0["reductions"] == [{"prime": 2, "value": "x + x^-1", "constant": False}]
    assert "a_0" in payload["reason"] and "mod 2" in payload["reason"]


def test_charpoly_rejects_additive_spec(capsys):
    code, _, err = run_cli(capsys, "charpoly", str(SPECS / "additive42.json"))
    assert code == 2
    assert "linear" in err


def test_orbit_shear_and_identity(capsys):
    code, out, _ = run_cli(capsys, "orbit", str(SPECS / "shear.json"))
    assert code == 0
    assert "preperiod 0, period 4: power set has 4 elements" in out

    code, out, _ = run_cli(capsys, "orbit", str(SPECS / "identity.json"),
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["size"] == 1


def test_orbit_budget_exhaustion_on_finite_rule(capsys):
    code, out, _ = run_cli(capsys, "orbit", str(SPECS / "shear.json"), "--budget", "2")
    assert code == 3
    assert "indeterminate (budget 2); coefficient verdict: finite" in out


def test_orbit_infinite_rule_reports_degree_growth(capsys):
    code, out, _ = run_cli(capsys, "orbit", str(SPECS / "rule90.json"), "--budget", "16")
    assert code == 0
    assert "indeterminate (budget 16); coefficient verdict: infinite" in out
    assert "max entry degrees along doubled powers: [1, 2, 4, 8, 16, 32]" in out


def test_spec_error_names_bad_json_line(capsys, tmp_path):
    path = write_spec(tmp_path, "{\n  \"kind\": \"linear\",\n  oops\n}\n")
    code, _, err = run_cli(capsys, "analyze", path)
    assert code == 2
    assert ":3:" in err  # line of the syntax error


def test_spec_error_names_bad_fields(capsys, tmp_path):
    cases = [
        ({"kind": "affine"}, "\"kind\""),
        ({"kind": "linear", "n": 1, "radius": 0, "matrices": [[[1]]]}, "\"m\""),
        ({"kind": "linear", "m": 1, "n": 1, "radius": 0, "matrices": [[[1]]]}, "\"m\""),
        ({"kind": "linear", "m": 2, "n": 1, "radius": 1, "matrices": [[[1]]]}, "3 matrices"),
        ({"kind": "linear", "m": 2, "n": 2, "radius": 0, "matrices": [[[1]]]}, "2x2"),
        ({"kind": "linear", "m": 2, "n": 1, "radius": 0, "matrices": [[[1]]],
          "initial": {"a": [1]}}, "position"),
        ({"kind": "linear", "m": 2, "n": 1, "radius": 0, "matrices": [[[1]]],
          "initial": {"0": [1, 1]}}, "vector of 1"),
        ({"kind": "additive", "group": [6], "radius": 0, "matrices": [[[1]]]},
         "\"group\""),
    ]
    for payload, needle in cases:
        code, _, err = run_cli(capsys, "analyze", write_spec(tmp_path, payload))
        assert code == 2, payload
        assert needle in err, (payload, err)


def test_spec_error_names_hom_violation_with_offset(capsys, tmp_path):
    payload = {"kind": "additive", "group": [4, 2], "radius": 1,
               "matrices": [[[0, 0], [0, 0]], [[0, 1], [0, 1]], [[0, 0], [0, 0]]]}
    code, _, err = run_cli(capsys, "analyze", write_spec(tmp_path, payload))
    assert code == 2
    assert "matrices[1] (offset 0)" in err
    assert "(0,1)" in err and "divisible by 2" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "analyze", str(tmp_path / "nope.json"))
    assert code == 2
    assert "cannot read" in err


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "addca", "analyze", str(SPECS / "rule90.json")],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert "transitive: yes" in result.stdout
