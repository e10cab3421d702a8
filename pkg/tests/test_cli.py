import json
import subprocess
import sys

import pytest

from cmw import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_bnstar(capsys):
    code, out, _ = run(capsys, "compute", "--op", "bnstar", "--input", "1⊗θ0")
    assert code == 0 and out.strip() == "−2(1⊗θ⁻¹⊗x₁)"


def test_compute_lie_horizontal(capsys):
    code, out, _ = run(capsys, "compute", "--op", "dright", "--input", "1⊗θ0")
    assert code == 0 and out.strip() == "2(1⊗θ⁻¹⊗θ¹)"


def test_compute_eval_on_jets(capsys):
    code, out, _ = run(capsys, "compute", "--op", "eval", "--input", "x2⊗θ0⊗x1x2", "--jets", "[6; 2, 3, 0, 0, 0, 0]")
    assert code == 0 and out.strip() == "6(x²⊗θ⁰)"


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--op", "bnstar", "--input", "1⊗θ0", "--format", "json")
    data = json.loads(out)
    assert data["result"] == [{"coeff": "-2/1", "key": [["x", 0], [-1], [[1]]]}]


def test_e1_report(capsys):
    code, out, _ = run(capsys, "e1", "--complex", "lie36", "--p", "0", "--q", "1")
    data = json.loads(out)
    assert code == 0
    assert {"complex", "page", "p", "q", "weight", "dim", "representatives"} <= set(data)
    assert data["dim"] == 1 and data["representatives"][0]["text"] == "1⊗θ⁰"


def test_e1_hopf(capsys):
    code, out, _ = run(capsys, "e1", "--complex", "hopf48", "--p", "0", "--q", "1", "-D", "4")
    assert code == 0 and "1⊗θ⁰" in [r["text"] for r in json.loads(out)["representatives"]]


@pytest.mark.parametrize("argv", [["verify", "-D", "3"], ["verify", "-D", "6", "--jet-order", "7"],
                                  ["compute", "--op", "bnstar", "--input", "1⊗θ9"],
                                  ["compute", "--op", "nope", "--input", "1"]])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_lie_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lie", "--degree", "8")
    assert code == 0
    assert "conventions ledger" in out and "delta_e0: -1" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "core", "--format", "json", "-D", "4")
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass"
    assert all(set(i) >= {"anchor", "status"} and i["status"] == "pass" for i in data["identities"])
    assert data["ledger"]["class_coordinates"] == "log"


def test_verify_reports_failure_with_diff(capsys, monkeypatch):
    from cmw import suites
    from cmw.core import FormalSum
    bad = lambda cfg: [suites.eq("broken", "test/broken", FormalSum.basis((("x", 1), (), ())), FormalSum())]
    monkeypatch.setitem(suites.SUITES, "core", bad)
    code, out, _ = run(capsys, "verify", "--suite", "core", "-D", "4")
    assert code == 1
    assert "FAIL" in out and "difference:" in out and "x¹" in out


def test_ledger_env_var(capsys, tmp_path, monkeypatch):
    p = tmp_path / "led.json"
    monkeypatch.setenv("CMW_LEDGER", str(p))
    code, out, _ = run(capsys, "verify", "--suite", "core", "-D", "4")
    assert code == 0 and p.exists() and str(p) in out


def test_tampered_ledger_fails(capsys, tmp_path, monkeypatch):
    p = tmp_path / "led.json"
    p.write_text('{"delta_e0": "1"}')
    monkeypatch.setenv("CMW_LEDGER", str(p))
    code, _, err = run(capsys, "verify", "--suite", "core", "-D", "4")
    assert code == 1 and "disagrees" in err


def test_export_deterministic_and_reimport(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(capsys, "export", "-D", "4", "--out", str(a))[0] == 0
    assert run(capsys, "export", "-D", "4", "--out", str(b))[0] == 0
    names = sorted(x.name for x in a.iterdir())
    assert names == sorted(["lambda.json", "mu.json", "lambda_prime.json", "mu_prime.json", "lambda_hopf.json",
                            "mu_hopf.json", "dl.json", "l.json", "conventions.json"])
    for n in names:
        assert (a / n).read_bytes() == (b / n).read_bytes()
    data = json.loads((a / "lambda_prime.json").read_text())
    assert set(data) == {"complex", "bidegree", "terms", "window"}
    code, out, _ = run(capsys, "verify", "--suite", "lie", "-D", "4", "--import", str(a))
    assert code == 0 and "import/l-cocycle" in out


def test_export_unwritable(capsys, tmp_path):
    f = tmp_path / "file"
    f.write_text("")
    code, _, err = run(capsys, "export", "-D", "4", "--out", str(f / "x"))
    assert code == 1 and str(f) in err


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "cmw.cli", "compute", "--op", "bnstar", "--input", "1⊗θ0"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "−2(1⊗θ⁻¹⊗x₁)"
