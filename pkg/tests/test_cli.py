import json
import subprocess
import sys

import pytest

from pctree.cli import main
from pctree.extremal import generate
from pctree.formats import format_graph, read_graph, write_graph
from pctree.graph import EdgeColoredGraph

PROPER_K4 = "p ecg 4 6\ne 1 2 1\ne 3 4 1\ne 1 3 2\ne 2 4 2\ne 1 4 3\ne 2 3 3\n"
SMALL_CNF = "p cnf 3 4\n1 2 0\n1 -2 0\n-1 3 0\n-1 -3 0\n"


@pytest.fixture
def k4(tmp_path):
    p = tmp_path / "k4.ecg"
    p.write_text(PROPER_K4)
    return p


def test_solve_tree(k4, tmp_path, capsys):
    report = tmp_path / "r.json"
    assert main(["solve", str(k4), "--report", str(report)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("t 4\n") and out.count("\ne ") == 3
    data = json.loads(report.read_text())
    assert data["branch"] == "exhaustive" and data["order"] == 4


def test_solve_no(tmp_path, capsys):
    g, _ = generate("G5", 4, 1)
    p = tmp_path / "g5.ecg"
    write_graph(g, p)
    assert main(["solve", str(p)]) == 1
    assert capsys.readouterr().out == "NO extremal G5 m=4 k=1\n"


def test_solve_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.ecg"
    bad.write_text("p ecg 2 1\n")
    assert main(["solve", str(bad)]) == 2
    split = tmp_path / "split.ecg"
    split.write_text("p ecg 3 1\ne 1 2 1\n")
    assert main(["solve", str(split)]) == 2
    assert main(["solve", str(tmp_path / "missing.ecg")]) == 2
    assert main(["solve", str(split), "--delta0", "1"]) == 2


def test_repair_fixture_via_files(tmp_path, capsys):
    out = tmp_path / "chord.ecg"
    assert main(["gen", "g6-chord", "-o", str(out)]) == 0
    assert main(["solve", str(out)]) == 0
    assert capsys.readouterr().out.startswith("t 7\n")


def test_rainbow_rejects_non_star_colored(tmp_path, k4, capsys):
    assert main(["rainbow", str(k4)]) == 2
    star = tmp_path / "star.ecg"
    star.write_text("p ecg 4 3\ne 1 2 1\ne 1 3 2\ne 1 4 3\n")
    assert main(["rainbow", str(star)]) == 0
    assert capsys.readouterr().out.startswith("t 3\n")


def test_oracle_guard(tmp_path, capsys):
    path = tmp_path / "p.ecg"
    write_graph(EdgeColoredGraph(14, [(i, i + 1, 1 + i % 2) for i in range(13)]), path)
    assert main(["oracle", str(path)]) == 2
    assert main(["oracle", str(path), "--bound", "14"]) == 0
    assert capsys.readouterr().out.startswith("t 14\n")


def test_gen_writes_sidecar(tmp_path):
    out = tmp_path / "g1.ecg"
    assert main(["gen", "G1", "--m", "5", "--k", "2", "--seed", "3", "-o", str(out)]) == 0
    side = json.loads(out.with_suffix(".json").read_text())
    assert side["tag"] == "G1" and side["m"] == 5
    g, _ = generate("G1", 5, 2, seed=3)
    assert read_graph(out) == g


def test_gen_bad_parameters(capsys):
    assert main(["gen", "G1", "--m", "4", "--k", "2"]) == 2


def test_gen_random_is_deterministic(capsys):
    main(["gen", "random", "--n", "7", "--seed", "5"])
    first = capsys.readouterr().out
    main(["gen", "random", "--n", "7", "--seed", "5"])
    assert capsys.readouterr().out == first


def test_reduce_verify_round_trip(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text(SMALL_CNF)
    graph = tmp_path / "f.ecg"
    assert main(["reduce", str(cnf), "-o", str(graph)]) == 0
    side = json.loads(graph.with_suffix(".json").read_text())
    assert side["s"] == 3 and side["t"] == 4
    assert main(["oracle", str(graph), "--mode", "rainbow", "--bound", "13"]) == 0
    tree = tmp_path / "t.txt"
    tree.write_text(capsys.readouterr().out)
    assert tree.read_text().startswith("t 9\n")
    assert main(["verify", str(graph), str(tree), "--mode", "rainbow"]) == 0
    assert capsys.readouterr().out == "ok rainbow order=9\n"


def test_verify_reports_defects(tmp_path, capsys):
    g = tmp_path / "p.ecg"
    g.write_text("p ecg 3 2\ne 1 2 1\ne 2 3 1\n")
    t = tmp_path / "t.txt"
    t.write_text("t 3\ne 1 2 1\ne 2 3 1\n")
    assert main(["verify", str(g), str(t)]) == 1
    assert capsys.readouterr().out.startswith("invalid: two edges of color 1")


def test_recognize(tmp_path, capsys):
    g, _ = generate("G6", 3, 2, seed=1)
    p = tmp_path / "g6.ecg"
    write_graph(g, p)
    assert main(["recognize", str(p), "--tags", "G6"]) == 0
    assert json.loads(capsys.readouterr().out)["tag"] == "G6"
    assert main(["recognize", str(p), "--tags", "G1,G2"]) == 1
    assert main(["recognize", str(p), "--tags", "G9"]) == 2


def test_byte_identical_runs(k4):
    cmd = [sys.executable, "-m", "pctree", "solve", str(k4)]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout
