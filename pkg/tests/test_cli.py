import json
import subprocess
import sys

import pytest

from torsorkit.cli import COMMANDS, main, run_command
from torsorkit.specfile import bundled_names, load_spec


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_hopf_c2(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code, out, _ = run(capsys, "build-hopf", "c2_group_torsor", "--json", str(out_json))
    assert code == 0
    rep = json.loads(out_json.read_text(encoding="utf-8"))
    assert rep["schema"] == "torsorkit-report/1"
    assert rep["passed"] and rep["objects"]["hopf"]["dim"] == 2
    coords = [b["coordinates"] for b in rep["objects"]["hopf"]["basis"]]
    assert coords == [[["e⊗e", "1"]], [["g⊗g", "1"]]]
    assert "timing" in rep
    assert "result: PASS" in out


def test_grunspan_sweedler_reports_theta_not_identity(capsys):
    code, out, _ = run(capsys, "grunspan", "sweedler_self_torsor", "--json", "-", "--no-timing")
    rep = json.loads(out)
    assert code == 0
    assert rep["objects"]["theta_is_identity"] is False
    assert [["x"], "x", "-1"] in [[e[0], e[1], e[2]] for e in rep["objects"]["theta"]]


def test_corrupted_fixture_exits_one_with_witness(capsys):
    code, out, _ = run(capsys, "check-torsor", "corrupted_c3_torsor")
    assert code == 1
    assert "FAIL  torsor axioms" in out
    assert "left law" in out and " at g" in out


def test_monoid_antipode_fails(capsys):
    code, out, _ = run(capsys, "antipode", "monoid_bialgebra", "--no-timing")
    assert code == 1
    assert "AntipodeMissing" in out


def test_invalid_input_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": "Q", "algebra": {"basis": ["1"], "structure_constants": [[0, 0, 3, "1"]], "unit": ["1"]}}')
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert "structure_constants[0][2]" in err
    code, _, err = run(capsys, "check-torsor", "monoid_bialgebra")
    assert code == 2 and "no 'mu' block" in err
    code, _, err = run(capsys, "validate", "c2_group_torsor", "--field-override", "Fp:4")
    assert code == 2


def test_error_report_written_as_json(capsys, tmp_path):
    out = tmp_path / "err.json"
    code, _, _ = run(capsys, "validate", str(tmp_path / "missing.json"), "--json", str(out))
    assert code == 2
    rep = json.loads(out.read_text(encoding="utf-8"))
    assert rep["passed"] is False and rep["errors"]


def test_field_override_runs_over_fp(capsys):
    code, out, _ = run(capsys, "build-hopf", "sqrt2_torsor", "--field-override", "Fp:7", "--json", "-", "--no-timing")
    rep = json.loads(out)
    assert code == 0 and rep["input"]["field"] == "Fp:7"


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and out.split() == bundled_names()


def test_expected_block_mismatch_fails():
    spec = load_spec("c2_group_torsor")
    spec.expected = {"hopf_dim": 3}
    rep = run_command("build-hopf", spec, timing=False)
    assert not rep["passed"]
    assert rep["expected"]["hopf_dim"] == {"expected": 3, "actual": 2, "match": False}


@pytest.mark.parametrize("cmd", sorted(COMMANDS))
def test_reports_are_deterministic(cmd, capsys, tmp_path):
    for name in ["sweedler_self_torsor_f5", "s3_over_a3_btorsor", "sweedler_hopf"]:
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        c1, _, _ = run(capsys, cmd, name, "--no-timing", "--json", str(a))
        c2, _, _ = run(capsys, cmd, name, "--no-timing", "--json", str(b))
        assert c1 == c2
        assert a.read_bytes() == b.read_bytes()


def test_console_entry_points():
    r = subprocess.run([sys.executable, "-m", "torsorkit", "check-torsor", "unit_torsor", "--no-timing"], capture_output=True, text=True)
    assert r.returncode == 0 and "result: PASS" in r.stdout
    r = subprocess.run(["torsorkit", "check-torsor", "corrupted_sweedler_torsor"], capture_output=True, text=True)
    assert r.returncode == 1
