import json
import random
import subprocess
import sys

import pytest

from dense_anchor import load_edge_list
from dense_anchor.cli import EXIT_INFEASIBLE, EXIT_INPUT, EXIT_OK, EXIT_USAGE, main
from dense_anchor.io import export_edgelist
from graphgen import random_graph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_stats_k5_row(capsys, fixtures_dir):
    code, out, _ = run(capsys, "stats", fixtures_dir / "k5.txt")
    assert code == EXIT_OK
    header, row = out.strip().split("\n")
    assert header.split("\t") == ["size", "edges", "density", "density_exact", "kappa", "lambda", "min_degree"]
    assert row.split("\t") == ["5", "10", "2.00", "2", "4", "4", "4"]


def test_stats_json_and_greedy(capsys, fixtures_dir):
    code, out, _ = run(capsys, "stats", fixtures_dir / "two_k10_shared.txt", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["size"] == 19 and doc["edges"] == 90 and doc["kappa"] == 1
    assert doc["density"] == {"exact": "90/19", "decimal": "4.74"} and doc["exact"] is True
    code, out, _ = run(capsys, "stats", fixtures_dir / "k5.txt", "--greedy", "--format", "json")
    assert json.loads(out)["exact"] is False


def test_stats_min_degree_bounds_connectivity(capsys, fixtures_dir):
    for name in ("k5.txt", "two_k10_shared.txt", "two_k10_bridge.txt", "snap_sample.txt"):
        _, out, _ = run(capsys, "stats", fixtures_dir / name, "--format", "json")
        doc = json.loads(out)
        delta = doc["min_degree"]["exact"]
        assert int(delta) >= doc["kappa"]
        assert int(delta) >= int(doc["lambda"]["exact"])


def test_solve_feasible_and_infeasible(capsys, fixtures_dir):
    code, out, _ = run(capsys, "solve", fixtures_dir / "two_k10_shared.txt", "--mode", "vertex", "--k", "3")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["status"] == "FEASIBLE" and doc["size"] == 10
    assert doc["density"]["decimal"] == "4.50" and doc["gamma"]["exact"] == "1"
    code, out, _ = run(capsys, "solve", fixtures_dir / "k5.txt", "--mode", "vertex", "--k", "6")
    doc = json.loads(out)
    assert code == EXIT_INFEASIBLE and doc["status"] == "INFEASIBLE" and doc["vertices"] == []


def test_solve_matula_edge_on_weighted_triangle(capsys, fixtures_dir):
    code, out, _ = run(capsys, "solve", fixtures_dir / "triangle123.txt", "--mode", "edge", "--k", "3",
                       "--algorithm", "matula")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "FEASIBLE"
    assert int(doc["connectivity"]["exact"]) >= 3
    assert doc["guarantee"]["theorem"] == "edge-matula" and "gamma" not in doc


def test_solve_rational_parameters(capsys, fixtures_dir):
    code, out, _ = run(capsys, "solve", fixtures_dir / "triangle123.txt", "--mode", "edge", "--k", "7/2",
                       "--gamma", "1.5")
    doc = json.loads(out)
    assert doc["k"] == {"exact": "7/2", "decimal": "3.50"}
    assert doc["gamma"] == {"exact": "3/2", "decimal": "1.50"}


@pytest.mark.parametrize("argv", [
    ["solve", "k5.txt", "--mode", "vertex", "--k", "2", "--algorithm", "matula", "--gamma", "1"],
    ["solve", "k5.txt", "--mode", "vertex", "--k", "3/2"],
    ["solve", "k5.txt", "--mode", "vertex", "--k", "two"],
    ["solve", "k5.txt", "--mode", "edge", "--k", "1", "--gamma", "3"],
    ["solve", "k5.txt", "--mode", "both", "--k", "1"],
    ["export", "k5.txt"],
    ["export", "k5.txt", "--dot", "--edgelist"],
    ["stats", "k5.txt", "--weighted", "--unweighted"],
    [],
])
def test_usage_errors(capsys, fixtures_dir, argv):
    argv = [str(fixtures_dir / a) if a.endswith(".txt") else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and "usage error" in err


def test_input_errors(capsys, fixtures_dir, tmp_path):
    code, _, err = run(capsys, "stats", tmp_path / "missing.txt")
    assert code == EXIT_INPUT and "error" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n3\n")
    code, _, err = run(capsys, "densest", bad)
    assert code == EXIT_INPUT and "line 2" in err
    code, _, _ = run(capsys, "stats", fixtures_dir / "k3.txt", "--weighted")
    assert code == EXIT_INPUT


def test_multi_edge_warning_goes_to_stderr(capsys, tmp_path):
    p = tmp_path / "multi.txt"
    p.write_text("a b 1\nb a 2\nb c 1\n")
    code, out, err = run(capsys, "densest", p)
    assert code == 0 and "warning" in err and json.loads(out)["size"] >= 2


def test_export_dot(capsys, fixtures_dir, tmp_path):
    code, out, _ = run(capsys, "export", fixtures_dir / "k3.txt", "--dot")
    assert code == 0 and out.startswith("graph G {")
    assert out.count(" -- ") == 3 and sum(1 for line in out.splitlines() if line.strip() in ('"a";', '"b";', '"c";')) == 3
    sub = tmp_path / "s.txt"
    sub.write_text("b\n")
    _, out, _ = run(capsys, "export", fixtures_dir / "k3.txt", "--dot", "--subset", sub)
    assert '"b" [style=filled, fillcolor="#e4572e"];' in out
    assert '"a";' in out and '"c";' in out


def test_export_unknown_labels(capsys, fixtures_dir, tmp_path):
    sub = tmp_path / "s.txt"
    sub.write_text("a\nzz\nyy\n")
    code, _, err = run(capsys, "export", fixtures_dir / "k3.txt", "--dot", "--subset", sub)
    assert code == EXIT_INPUT and "zz" in err and "yy" in err


def test_export_edgelist_round_trip(capsys, tmp_path):
    rng = random.Random(5)
    for i in range(10):
        g = random_graph(rng, rng.randint(2, 12), 0.4, "rational")
        src = tmp_path / f"g{i}.txt"
        src.write_text(export_edgelist(g))
        code, out, _ = run(capsys, "export", src, "--edgelist")
        assert code == 0 and out == src.read_text()
        h = load_edge_list(out.encode())
        relabel = {lab: int(lab) for lab in h.labels}
        assert sorted((min(relabel[h.labels[u]], relabel[h.labels[v]]),
                       max(relabel[h.labels[u]], relabel[h.labels[v]]), w) for u, v, w in h.edges()) \
            == sorted((int(g.labels[u]), int(g.labels[v]), w) for u, v, w in g.edges())


GOLDEN = [
    ("stats_two_k10_shared.tsv", ["stats", "two_k10_shared.txt"]),
    ("stats_two_k10_bridge.tsv", ["stats", "two_k10_bridge.txt"]),
    ("solve_two_k10_shared_vertex_k3.json", ["solve", "two_k10_shared.txt", "--mode", "vertex", "--k", "3"]),
    ("solve_two_k10_bridge_edge_k2.json", ["solve", "two_k10_bridge.txt", "--mode", "edge", "--k", "2"]),
]


@pytest.mark.parametrize("golden,argv", GOLDEN, ids=[g for g, _ in GOLDEN])
def test_golden_outputs(capsys, fixtures_dir, golden_dir, golden, argv):
    argv = [str(fixtures_dir / a) if a.endswith(".txt") else a for a in argv]
    _, out, _ = run(capsys, *argv)
    assert out == (golden_dir / golden).read_text()


def test_console_script_runs_twice_identically(fixtures_dir):
    cmd = [sys.executable, "-m", "dense_anchor.cli", "solve", str(fixtures_dir / "snap_sample.txt"),
           "--mode", "edge", "--k", "3"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode in (EXIT_OK, EXIT_INFEASIBLE)
    assert a.stdout == b.stdout and a.stdout
