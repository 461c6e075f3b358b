import json
import subprocess
import sys

import pytest

from oddsymp.burau import BraidWord, burau_matrix
from oddsymp.cli import run
from oddsymp.lattice import matmul, matrix_from_json


def cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "oddsymp", *args], capture_output=True, text=True, timeout=120
    )


def test_burau_report(capsys):
    code, report = run(["burau", "--n", "3", "--word", "1,2"])
    assert code == 0
    expected = matmul(burau_matrix(BraidWord.parse(3, "1")), burau_matrix(BraidWord.parse(3, "2")))
    assert matrix_from_json(report["matrix"]) == expected
    assert report["permutation"] == [2, 3, 1]
    assert json.loads(capsys.readouterr().out) == report


def test_braiding_report():
    code, report = run(["braiding", "--n", "1", "--m", "1"])
    assert code == 0 and report["matrix"] == [["2", "1"], ["-1", "0"]]


def test_complex_save_and_homology(tmp_path):
    path = tmp_path / "x3.json"
    code, report = run(["complex", "--family", "X", "--n", "3", "--box", "2", "--save", str(path)])
    assert code == 0 and report["f_vector"] == [13, 36]
    code, rep = run(["homology", "--input", str(path)])
    assert code == 0 and rep["euler_ok"]


@pytest.mark.parametrize(
    "fixture,flags,betti",
    [
        ("boundary-tetrahedron", ["--unreduced"], [1, 0, 1]),
        ("boundary-tetrahedron", [], [0, 0, 0, 1]),
        ("rp2", ["--coefficients", "Q"], [0, 0, 0, 0]),
        ("two-points", [], [0, 1]),
    ],
)
def test_homology_fixtures(fixture, flags, betti):
    code, rep = run(["homology", "--fixture", fixture, *flags])
    assert code == 0
    assert rep["betti_Q"] == betti


def test_homology_cone():
    code, rep = run(["homology", "--fixture", "rp2", "--cone"])
    assert code == 0 and rep["connectivity"] is None


def test_kostant_and_pieri():
    code, rep = run(["kostant", "--lambda", "", "--n", "2"])
    assert code == 0
    assert [r["degree"] for r in rep["rows"]] == [0, 1, 2, 3]
    assert rep["trivial_summand_degrees"] == [0, 3]
    code, rep = run(["pieri", "--lambda", "2", "--sp"])
    assert {tuple(e["partition"]): e["multiplicity"] for e in rep["shift"]} == {(): 3, (1,): 2, (2,): 1}


def test_multiplicity_and_polyfit():
    code, rep = run(["multiplicity", "--lambda", "", "--g", "3", "--r", "1"])
    assert code == 0 and rep["multiplicity"] == 4
    code, rep = run(["polyfit", "--points", "0:1,1:2,2:5,3:10"])
    assert code == 0 and rep["polynomial"] == "x^2 + 1" and rep["spare_checks"] == 1
    code, rep = run(["polyfit", "--lambda", "", "--r", "1", "--g-range", "1:4"])
    assert code == 0 and rep["degree"] == 1


def test_orbit_commands():
    code, rep = run(["orbit-necessity", "--n", "4", "--p", "1", "--trials", "50"])
    assert code == 0 and rep["passed"]
    code, rep = run(["orbit-search", "--n", "4", "--plant", "3", "--p", "1"])
    assert code == 0 and rep["found"]


def test_output_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, report = run(["pieri", "--lambda", "2,1", "-o", str(out)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text()) == report


@pytest.mark.parametrize(
    "argv",
    [
        ["burau", "--n", "3", "--word", "5"],
        ["burau", "--n", "0", "--word", "1"],
        ["kostant", "--lambda", "1,2", "--n", "2"],
        ["multiplicity", "--lambda", "1,1", "--g", "1", "--r", "1"],
        ["homology", "--input", "/nonexistent.json"],
        ["homology", "--fixture", "rp2", "--coefficients", "R"],
        ["polyfit", "--points", "1:1"],
        ["orbit-necessity", "--n", "3", "--p", "5"],
        ["orbit-search", "--n", "4", "--target", "1,1,-1,0"],
        ["nonsense"],
    ],
)
def test_invalid_input_exits_1(argv):
    assert run(argv)[0] == 1


def test_budget_exhaustion_exits_2():
    argv = ["complex", "--family", "X", "--n", "5", "--max-simplices", "10"]
    assert run(argv)[0] == 2


def test_subprocess_exit_codes_and_reproducibility():
    args = ["orbit-necessity", "--n", "5", "--p", "1", "--trials", "200", "--seed", "4"]
    a, b = cli(*args), cli(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert cli("burau", "--n", "2", "--word", "x").returncode == 1
    assert cli("complex", "--family", "X", "--n", "6", "--time-budget", "1").returncode == 2
