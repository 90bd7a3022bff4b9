from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from sfindex.cli import run

DATA = Path(__file__).parent / "data"


def _run(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_of_forward_shift(capsys):
    code, out, _ = _run(capsys, "invariants", DATA / "s_plus.json")
    doc = json.loads(out)
    assert code == 0
    assert {k: doc[k] for k in ("alpha", "beta", "index", "ascent", "descent")} == {
        "alpha": 0, "beta": 1, "index": -1, "ascent": 0, "descent": "exceeds(8)"}
    assert doc["table"]["c"] == [1] * 9


def test_chain_bound_flag_after_subcommand(capsys):
    code, out, _ = _run(capsys, "invariants", DATA / "s_plus.json", "--chain-bound", "3")
    assert code == 0 and json.loads(out)["descent"] == "exceeds(3)"


def test_family_index(capsys):
    code, out, _ = _run(capsys, "family-index", DATA / "two_component_family.json")
    assert code == 0
    assert json.loads(out) == {"components": 2, "index": {"v0": -1, "w0": 2}}


def test_vacuous_axiom_suite(capsys):
    code, out, _ = _run(capsys, "suite", "axioms", "--reg", "R1", "--trials", "0")
    doc = json.loads(out)
    assert code == 0 and doc["passes"] == 0 and doc["failures"] == []


def test_validate_ok_and_errors(capsys):
    code, out, _ = _run(capsys, "validate", DATA / "ratspec.json")
    assert code == 0 and json.loads(out)["valid"] is True
    code, _, err = _run(capsys, "validate", DATA / "unknown_vertex_space.json")
    assert code == 1 and json.loads(err)["path"] == "$.edges[1]"
    code, _, err = _run(capsys, "validate", DATA / "mismatch_family.json")
    doc = json.loads(err)
    assert code == 1 and doc["edge"] == ["a", "b"] and doc["edge_index"] == 0
    code, _, err = _run(capsys, "validate", DATA / "malformed.json")
    assert code == 1 and "line 2" in json.loads(err)["message"]


def test_homotopy_check_exit_codes(capsys):
    code, out, _ = _run(capsys, "homotopy-check", DATA / "good_homotopy.json")
    assert code == 0 and json.loads(out)["details"]["index"] == {"x": 1}
    code, _, err = _run(capsys, "homotopy-check", DATA / "planted_jump_homotopy.json")
    assert code == 1 and json.loads(err)["error"] == "AdmissibilityError"


def test_membership_spectrum_smt(capsys):
    code, out, _ = _run(capsys, "membership", DATA / "s_plus.json", "--reg", "R6", "--reg", "USR5")
    assert code == 0 and json.loads(out)["verdicts"] == {"R6": "yes", "USR5": "yes"}
    code, out, _ = _run(capsys, "membership", DATA / "s_plus.json", "--reg", "R3", "--chain-bound", "4")
    assert json.loads(out)["verdicts"]["R3"]["unknown"] == 4
    code, out, _ = _run(capsys, "spectrum", DATA / "ratspec.json", "--reg", "R11")
    assert code == 0 and json.loads(out)["spectra"] == {"R11": ["0", "2"]}
    code, out, _ = _run(capsys, "smt-check", DATA / "ratspec.json", "--poly", "0,0,1")
    assert code == 0 and json.loads(out)["failures"] == []
    code, _, err = _run(capsys, "spectrum", DATA / "s_plus.json")
    assert code == 1


def test_probe_and_out_file(capsys, tmp_path):
    target = tmp_path / "probe.json"
    code, out, _ = _run(capsys, "probe", DATA / "two_component_family.json", "--trials", "5", "--out", target)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["passes"] == 5


def test_small_suites(capsys):
    for name in ("index", "goldens", "weyl", "quasi-inverse"):
        code, out, _ = _run(capsys, "suite", name, "--trials", "3")
        assert code == 0, out


def test_reports_are_deterministic(capsys):
    runs = [_run(capsys, "suite", "composition", "--trials", "4", "--seed", "7")[1] for _ in range(2)]
    assert runs[0] == runs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sfindex", "family-index", str(DATA / "two_component_family.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["components"] == 2


def test_bad_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["suite", "nope"])
    assert exc.value.code == 2
