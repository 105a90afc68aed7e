from __future__ import annotations

import json
import subprocess
import sys

import pytest

from nilgraph.cli import main
from nilgraph.errors import ParseError
from nilgraph.families import get_family, realize
from nilgraph.graph import format_edge_list, path_graph
from nilgraph.io import graph_from_json, graph_to_json, read_graph
from nilgraph.sweep import CSV_VERSION, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k2(tmp_path):
    path = tmp_path / "k2.txt"
    path.write_text("2 1\n1 2\n")
    return path


def test_check_positive(capsys, k2):
    code, out, _ = run(capsys, "check", str(k2))
    assert code == 0 and "c1 {1,2} = 1/3" in out and out.rstrip().endswith("POSITIVE")


def test_check_non_positive(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(format_edge_list(realize(get_family("two-chain").spec(r=3, s=2))))
    code, out, _ = run(capsys, "check", str(path), "--float")
    assert code == 1 and out.rstrip().endswith("NON-POSITIVE") and "offending edges: 7" in out


def test_check_vacuous(capsys, tmp_path):
    path = tmp_path / "e.txt"
    path.write_text("3 0\n")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0 and "VACUOUS" in out


def test_check_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n1 2\n1 1\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "self-loop" in err and "at line 3" in err


def test_check_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "nope.txt"))
    assert code == 2 and "error" in err


def test_check_nu_scaling(capsys, k2):
    code, out, _ = run(capsys, "check", str(k2), "--nu", "7")
    assert code == 0 and "c1 {1,2} = 7/3" in out
    code, _, _ = run(capsys, "check", str(k2), "--nu", "-1")
    assert code == 2


def test_json_round_trip(tmp_path, capsys):
    g = realize(get_family("mid4").spec(r=3, s=2, t=2, u=1))
    text = graph_to_json(g, "mid4", {"r": 3, "s": 2, "t": 2, "u": 1})
    g2, meta = graph_from_json(text)
    assert g2 == g and meta == {"name": "mid4", "params": {"r": 3, "s": 2, "t": 2, "u": 1}}
    path = tmp_path / "g.json"
    code, out, _ = run(capsys, "family", "mid4", "r=3", "s=2", "t=2", "u=1", "--format", "json")
    path.write_text(out)
    assert code == 0 and read_graph(path)[0] == g
    # extension decides the format unless overridden
    plain = tmp_path / "g.edges.json"
    plain.write_text(format_edge_list(g))
    assert read_graph(plain, "edges")[0] == g
    with pytest.raises(ParseError):
        read_graph(plain)


@pytest.mark.parametrize(
    "doc",
    ['{"format": "other"}', '{"format": "nilgraph-graph", "version": 2, "q": 1, "edges": []}',
     '{"format": "nilgraph-graph", "version": 1, "q": 3, "edges": [[1, 1]]}', "not json"],
)
def test_bad_json_documents(doc):
    with pytest.raises(ParseError):
        graph_from_json(doc)


def test_decompose_text_and_dot(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text(format_edge_list(path_graph(3)))
    code, out, _ = run(capsys, "decompose", str(path))
    assert code == 0 and "component 0 [discrete]: 1 3" in out and "cross(0,1)" in out
    code, out, _ = run(capsys, "decompose", str(path), "--format", "dot")
    assert code == 0 and out.startswith("graph coherence {")


def test_family_text(capsys):
    code, out, _ = run(capsys, "family", "mid4", "r=2", "s=2", "t=2", "u=1")
    assert code == 0
    assert "claim: NON-POSITIVE" in out and "closed form e = -1/25" in out and "verdict: NON-POSITIVE" in out
    code, out, _ = run(capsys, "family", "two-chain", "r=1", "s=3")
    assert "warning:" in out


def test_family_errors(capsys):
    assert run(capsys, "family", "hexagon", "r=1")[0] == 2
    assert run(capsys, "family", "two-chain", "r=1")[0] == 2
    assert run(capsys, "family", "two-chain", "r1", "s=2")[0] == 2


def test_theorem_small_q_refused(capsys):
    code, _, err = run(capsys, "theorem", "10")
    assert code == 2 and "q=10" in err


def test_theorem_small_q_override(capsys):
    code, out, _ = run(capsys, "theorem", "7", "--override-q-min", "--format", "text")
    assert code == 1 and "certified: False" in out


def test_theorem_csv(capsys):
    code, out, _ = run(capsys, "theorem", "21", "--jobs", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# nilgraph theorem csv v1" and len(lines) == 160


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "two-chain", "r=1..8", "s=1..8")
    lines = out.splitlines()
    assert code == 0 and lines[0] == CSV_VERSION and len(lines) == 2 + 64
    assert all(line.split(",")[5] == "true" for line in lines[2:])
    assert run(capsys, "sweep", "no-such-family", "r=1")[0] == 2
    assert run(capsys, "sweep", "two-chain", "r=1..3")[0] == 2


def test_sweep_disagreement_exit(capsys):
    code, out, _ = run(capsys, "sweep", "mid4", "r=1", "s=1", "t=2", "u=1")
    assert code == 1 and out.splitlines()[2] == "mid4,1,1,2,1,NON-POSITIVE,POSITIVE,false,1/38,true"


def test_sweep_parallel_matches_serial(capsys):
    serial = run(capsys, "sweep", "right5", "r=1..3", "u=1..2", "v=1..6")[1]
    parallel = run(capsys, "sweep", "right5", "r=1..3", "u=1..2", "v=1..6", "--jobs", "3")[1]
    assert serial == parallel


def test_soliton_command(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text(format_edge_list(path_graph(3)))
    code, out, _ = run(capsys, "soliton", str(path), "--float")
    assert code == 0 and "ACCEPTED" in out and "scales:" in out
    code, out, _ = run(capsys, "soliton", str(path), "--seed-weights")
    assert code == 0
    bad = tmp_path / "bad.txt"
    bad.write_text(format_edge_list(realize(get_family("left4").spec(s=1, u=6))))
    code, out, _ = run(capsys, "soliton", str(bad), "--max-iter", "2000")
    assert code == 1 and "NOT FOUND" in out
    assert run(capsys, "soliton", str(path), "--tol", "0")[0] == 2


@pytest.mark.parametrize("text, values", [("1..4", [1, 2, 3, 4]), ("3", [3]), ("1,2,5", [1, 2, 5]), ("1..2,7", [1, 2, 7])])
def test_parse_range(text, values):
    assert parse_range(text) == values


def test_no_command_and_module_entry(capsys):
    assert main([]) == 2
    out = subprocess.run([sys.executable, "-m", "nilgraph", "--backend-info"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() in ("cython", "python")
