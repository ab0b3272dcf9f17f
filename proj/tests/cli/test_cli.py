import json
import os
import subprocess

import pytest

BIN = os.environ.get("MDSCONV_BIN", os.path.join(os.path.dirname(__file__), "..", "..", "build", "mdsconv"))

# A (4, 2, 1) code over F_2 with a weight-2 constant codeword.
NON_MDS = {
    "q": 2,
    "parity": {"rows": 2, "cols": 4, "coeffs": [[[1, 1, 0, 0], [0, 0, 1, 1]], [[0, 0, 0, 0], [1, 1, 1, 1]]]},
    "expected": {"mds": True, "smds": False, "mdp": False},
}


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, timeout=120)


def test_field_ok_and_invalid():
    ok = run("field", "--p", "2", "--m", "3")
    assert ok.returncode == 0
    assert "powers: 1 2 4 3 6 7 5" in ok.stdout
    assert run("field", "--p", "4", "--m", "1").returncode == 2
    assert run("field", "--p", "2", "--m", "2", "--modulus", "1,0,1").returncode == 2


def test_field_json():
    out = run("--format", "json", "field", "--p", "3", "--m", "2")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["modulus"] == [1, 0, 1]
    assert doc["theta"] == 4


def test_construct_rejects_out_of_range_parameters():
    bad = run("construct", "--family", "sec4", "--q", "8", "--k", "7", "--delta", "1")
    assert bad.returncode == 2
    assert "gamma" in bad.stderr
    assert run("construct", "--family", "sec5c2", "--q", "9", "--tau", "2").returncode == 2
    assert run("construct", "--family", "nope", "--q", "8").returncode == 2


def test_construct_json_bundle():
    out = run("construct", "--family", "sec3", "--q", "8", "--n", "7", "--k", "2", "--delta", "2", "--format", "json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["family"] == "sec3"
    assert doc["conv"] == {"n": 7, "k": 4, "delta": 2, "nu": 1}
    assert doc["block"]["d"] == 6


def test_verify_round_trip_matches_inline():
    params = ["--family", "sec4", "--q", "8", "--k", "3", "--delta", "2"]
    bundle = run("construct", *params, "--format", "json")
    assert bundle.returncode == 0
    piped = run("verify", "--input", "-", stdin=bundle.stdout)
    inline = run("verify", *params)
    assert piped.returncode == 0
    assert piped.stdout == inline.stdout
    assert json.loads(piped.stdout)["verdicts"]["mds"] == "Confirmed"


def test_verify_exit_codes():
    refuted = run("verify", "--input", "-", stdin=json.dumps(NON_MDS))
    assert refuted.returncode == 1
    assert json.loads(refuted.stdout)["verdicts"]["mds"] == "Refuted"
    assert run("verify", "--input", "-", stdin='{"q": 4}').returncode == 2
    assert run("verify", "--input", "-", stdin="not json").returncode == 2
    budget = run("verify", "--family", "sec3", "--q", "8", "--n", "7", "--k", "2", "--delta", "2", "--budget", "1")
    assert budget.returncode == 3


def test_examples_check():
    out = run("examples", "--check")
    assert out.returncode == 0
    lines = [l for l in out.stdout.splitlines() if l.startswith("Example")]
    assert len(lines) == 11
    assert all(l.endswith("ok") for l in lines)
    one = run("--format", "json", "examples", "--id", "1,9", "--check")
    assert one.returncode == 0
    assert run("examples", "--id", "12").returncode == 2


def test_sweep_csv_and_determinism(tmp_path):
    out = run("sweep", "--q", "3", "--no-timing")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0] == "family,q,n,k,delta,d0c,d1c,d2c,d3c,d4c,dfree_lo,dfree_hi,mds,smds,mdp,ms_elapsed"
    assert lines[1:] == ["sec4,3,3,1,1,2,3,3,3,3,3,3,Confirmed,Confirmed,Confirmed,0"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("--jobs", "1", "sweep", "--q", "4,5", "--no-timing", "--output", str(a)).returncode == 0
    assert run("--jobs", "3", "sweep", "--q", "4,5", "--no-timing", "--output", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()
    rows = json.loads(a.read_text())
    assert {r["family"] for r in rows} == {"sec3", "sec4", "sec5c1", "sec5c2"}


def test_sweep_rejects_empty_family_list():
    assert run("sweep", "--q", "4", "--families", "").returncode == 2
    assert run("sweep", "--q", "6").returncode == 2


@pytest.mark.parametrize("args", [[], ["bogus"], ["field", "--p"]])
def test_usage_errors(args):
    assert run(*args).returncode == 2
