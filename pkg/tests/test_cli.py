import json
import subprocess
import sys
from pathlib import Path

import pytest

from arithbertini.cli import main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
P1 = str(DATA / "p1_worked.json")
CONIC = str(DATA / "conic.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", P1)
    doc = json.loads(out)
    assert code == 0 and doc["deg_P"] == 4 and doc["Dprime"] == 2
    assert doc["table"][1] == {"m": 2, "P": "130"}
    code, out, _ = run(capsys, "bound", str(DATA / "p2_o1.json"))
    doc = json.loads(out)
    assert code == 0 and doc["deg_P"] == 18 and doc["Dprime"] == 4


def test_bound_text(capsys):
    code, out, _ = run(capsys, "bound", P1, "--format", "text", "--m-range", "1..2")
    assert code == 0
    assert "deg P = 4" in out and out.rstrip().endswith("130")


def test_missing_field_is_named(capsys, tmp_path):
    doc = json.loads(Path(CONIC).read_text())
    del doc["variety"]["degree"]
    code, _, err = run(capsys, "bound", write(tmp_path, "p.json", doc))
    assert code == 3 and "degree" in err


def test_malformed_poly_and_json(capsys, tmp_path):
    doc = json.loads(Path(CONIC).read_text())
    doc["variety"]["generators"] = ["X0*X2 - X1^"]
    code, _, err = run(capsys, "search", write(tmp_path, "p.json", doc))
    assert code == 3 and "generators" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "bound", str(bad))[0] == 3
    assert run(capsys, "bound", str(tmp_path / "missing.json"))[0] == 3


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "bound")[0] == 2
    assert run(capsys, "bound", P1, "--format", "xml")[0] == 2


def test_search_verify_round_trip(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    log = tmp_path / "run.log"
    code, _, _ = run(capsys, "search", P1, "-o", str(cert), "--log", str(log))
    assert code == 0
    doc = json.loads(cert.read_text())
    assert doc["m"] == 2 and doc["norm_value"] == "3/4"
    assert "m=1" in log.read_text() and "m=2" in log.read_text()
    code, out, _ = run(capsys, "verify", str(cert), P1)
    rep = json.loads(out)
    assert code == 0 and rep["ok"]


def test_search_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "search", CONIC, "-o", str(a), "--log", str(tmp_path / "l"))[0] == 0
    assert run(capsys, "search", CONIC, "-o", str(b), "--log", str(tmp_path / "l"))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_tampered_certificate(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    run(capsys, "search", P1, "-o", str(cert), "--log", str(tmp_path / "l"))
    doc = json.loads(cert.read_text())
    # make the section (X0 + X1)^2, which is not smooth
    by_exp = {tuple(a): i for i, a in enumerate(doc["basis_exponents"])}
    coeffs = ["0"] * len(doc["coefficients"])
    for e, c in (((2, 0), "1"), ((1, 1), "2"), ((0, 2), "1")):
        coeffs[by_exp[e]] = c
    doc["coefficients"] = coeffs
    code, out, _ = run(capsys, "verify", write(tmp_path, "t.json", doc), P1, "--format", "text")
    assert code == 7
    assert "FAIL smooth[0]" in out


def test_wrong_problem(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    run(capsys, "search", P1, "-o", str(cert), "--log", str(tmp_path / "l"))
    assert run(capsys, "verify", str(cert), CONIC)[0] == 8


def test_budget_exhausted(capsys, tmp_path):
    code, _, err = run(capsys, "search", P1, "--m-range", "1..1")
    assert code == 4 and "m=1" in err


def test_badlocus_system(capsys):
    code, out, _ = run(capsys, "badlocus", str(DATA / "pointline_system.json"))
    doc = json.loads(out)
    assert code == 0 and doc["degree"] == 2
    assert sorted(tuple(t["exponents"]) for t in doc["poly"]) == [(0, 2), (2, 0)]


def test_badlocus_series(capsys):
    code, out, _ = run(capsys, "badlocus", P1, "--m", "2")
    assert code == 0 and json.loads(out)["degree"] == 5
    assert run(capsys, "badlocus", P1)[0] == 2


def test_cnsolve(capsys):
    code, out, _ = run(capsys, "cnsolve", str(DATA / "cn_example.json"))
    assert code == 0 and json.loads(out) == {"point": ["0", "0"], "value": "-2"}


def test_console_script_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "arithbertini.cli", "bound", P1, "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "deg P = 4" in proc.stdout
