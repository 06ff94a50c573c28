import json
import subprocess
import sys
from pathlib import Path

import pytest

from wexpand.cli import main

FIX = Path(__file__).resolve().parents[1] / "src" / "wexpand" / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(out):
    return json.loads(out)


def test_construct_weighing(capsys, tmp_path):
    path = tmp_path / "w43.txt"
    code, out, _ = run(capsys, "construct", "weighing", "--seed", "W8_5", "--p", "5", "--m", "1", "--out", str(path))
    rep = report(out)
    assert code == 0 and rep["ok"] and rep["params"] == {"n": 43, "p": 25}
    assert rep["schema"] == 1 and len(rep["outputs"]["sha256"]) == 64
    assert len(path.read_text().splitlines()) == 44


def test_construct_bgw_and_design(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "bgw", "--p", "5", "--group", "4", "--m", "2")
    assert code == 0 and report(out)["params"] == {"v": 31, "k": 25, "lambda": 20, "n": 4}
    code, out, _ = run(capsys, "construct", "design", "--p", "5", "--m", "1", "--out", str(tmp_path / "d.txt"))
    assert code == 0 and report(out)["params"] == {"v": 61, "k": 25, "lambda": 10}


def test_construct_scheme(capsys):
    code, out, _ = run(capsys, "construct", "scheme", "--p", "3", "--group", "2", "--m", "1")
    sch = report(out)["details"]["scheme"]
    assert code == 0 and sch["size"] == 16 and sch["symmetric"] and sch["symmetric_iff_n2"]


def test_precondition_exit_code(capsys):
    code, _, err = run(capsys, "construct", "weighing", "--p", "4", "--m", "1")
    assert code == 2 and err.startswith("EvenCharacteristic")
    code, _, err = run(capsys, "construct", "design", "--p", "7", "--m", "1")
    assert code == 2 and err.startswith("NoPaleyDesign")
    code, _, err = run(capsys, "catalog", "show", "nope")
    assert code == 2 and err.startswith("UnknownSeed")


def test_verify_fixtures(capsys):
    code, out, _ = run(capsys, "verify", str(FIX / "W43_25.txt"), "--kind", "weighing")
    assert code == 0 and report(out)["params"] == {"n": 43, "p": 25}
    code, out, _ = run(capsys, "verify", str(FIX / "BGW31.txt"), "--kind", "bgw")
    rep = report(out)
    assert code == 0 and rep["params"] == {"v": 31, "k": 25, "lambda": 20, "n": 4}
    assert rep["details"]["encoding"] == {"0": -1, "1": 1, "2": 2, "3": 3, "4": 0}
    code, out, _ = run(capsys, "verify", str(FIX / "OA25x6.txt"), "--kind", "oa")
    assert code == 0 and report(out)["params"]["agreement"] == 1
    code, out, _ = run(capsys, "verify", str(FIX / "twin_D.txt"), "--kind", "design")
    assert code == 0 and report(out)["params"]["b"] == 10


def test_verify_failure_exit_code(capsys, tmp_path):
    text = (FIX / "W8_5.txt").read_text().splitlines()
    row = text[-1].split()
    row[-1] = "0" if row[-1] != "0" else "1"
    text[-1] = " ".join(row)
    bad = tmp_path / "bad.txt"
    bad.write_text("\n".join(text) + "\n")
    code, out, _ = run(capsys, "verify", str(bad), "--kind", "weighing")
    assert code == 3 and not report(out)["ok"]


def test_oa_and_catalog(capsys, tmp_path):
    code, out, _ = run(capsys, "oa", "--p", "3", "--m", "2", "--out", str(tmp_path / "o.txt"))
    assert code == 0 and report(out)["params"] == {"rows": 27, "cols": 13, "agreement": 4}
    code, out, _ = run(capsys, "catalog", "list")
    names = [e["name"] for e in report(out)["details"]["entries"]]
    assert "W43_25_appendix" in names
    code, out, _ = run(capsys, "catalog", "show", "W8_5")
    assert code == 0 and out.startswith("# kind=weighing")


def test_reports_are_stable(capsys):
    def strip(out):
        rep = report(out)
        rep.pop("timing")
        return rep

    _, a, _ = run(capsys, "construct", "bgw", "--p", "7", "--group", "3", "--m", "2")
    _, b, _ = run(capsys, "construct", "bgw", "--p", "7", "--group", "3", "--m", "2")
    assert strip(a) == strip(b)


@pytest.mark.slow
def test_table1(capsys):
    code, out, _ = run(capsys, "table1", "--max", "1000")
    rows = {tuple(r["seed"]): r for r in report(out)["details"]["rows"]}
    six = [(e["order"], e["weight"], e["status"]) for e in rows[(6, 5)]["entries"]]
    assert code == 0
    assert six == [(31, 25, "verified"), (156, 125, "verified"), (781, 625, "verified")]
    assert rows[(7, 4)]["entries"][0]["status"] == "formula-only"
    assert [(e["order"], e["weight"]) for e in rows[(16, 3)]["entries"]] == [(61, 9), (196, 27), (601, 81)]


def test_output_reverifies_in_subprocess(tmp_path):
    path = tmp_path / "b.txt"
    subprocess.run(
        [sys.executable, "-m", "wexpand.cli", "construct", "bgw", "--p", "3", "--group", "2", "--m", "3",
         "--out", str(path)], check=True, capture_output=True,
    )
    done = subprocess.run(
        [sys.executable, "-m", "wexpand.cli", "verify", str(path), "--kind", "bgw"],
        capture_output=True, text=True,
    )
    assert done.returncode == 0
    assert json.loads(done.stdout)["params"] == {"v": 40, "k": 27, "lambda": 18, "n": 2}
