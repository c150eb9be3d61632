import json
import subprocess
import sys

import networkx as nx
import pytest

from clustertube import serialize
from clustertube.cli import main
from clustertube.mutation import exchange_graph
from clustertube.quiver import all_quivers

from test_presentability import REFERENCE_GRID_N4


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_n4(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "4")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 21 and lines[-1] == "count: 20"
    assert all("apex=" in l for l in lines[:-1])


def test_enumerate_n2_and_apex_filter(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "2")
    assert out.splitlines() == ["1.1  apex=1", "2.1  apex=2", "count: 2"]
    code, out, _ = run(capsys, "enumerate", "-n", "4", "--apex", "2")
    assert out.splitlines()[-1] == "count: 5"


@pytest.mark.parametrize("argv", [["enumerate", "-n", "1"], ["graph", "-n", "4", "--apex", "9"], ["nope"], ["pr"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_rank_guard(capsys, monkeypatch):
    monkeypatch.setenv("CT_MAX_RANK", "5")
    code, _, err = run(capsys, "enumerate", "-n", "6")
    assert code == 2 and "CT_MAX_RANK" in err


def test_graph_dot_n3(capsys, tmp_path):
    path = tmp_path / "c3.dot"
    code, out, _ = run(capsys, "graph", "-n", "3", "--format", "dot", "--out", str(path))
    assert code == 0 and out == ""
    text = path.read_text()
    assert text.startswith("graph")
    assert text.count(" -- ") == 6
    assert text.count("style=dashed") == 3


def test_graph_json_n4_and_round_trip(capsys):
    code, out, _ = run(capsys, "graph", "-n", "4", "--format", "json")
    data = json.loads(out)
    assert len(data["nodes"]) == 20 and len(data["edges"]) == 30
    g = serialize.graph_from_json(data)
    ref = exchange_graph(4)
    assert g.nodes == ref.nodes and g.edges == ref.edges
    assert nx.is_connected(g.to_networkx())


def test_graph_n2_text(capsys):
    code, out, _ = run(capsys, "graph", "-n", "2")
    assert out.splitlines()[-1] == "nodes: 2  edges: 1"


def test_quiver_json_round_trip():
    for n in (2, 4, 5):
        for q in all_quivers(n).values():
            data = json.loads(serialize.dumps(serialize.quiver_to_json(q)))
            assert serialize.quiver_from_json(data) == q


def test_quivers_command(capsys):
    code, out, _ = run(capsys, "quivers", "-n", "3")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "quivers", "-n", "3", "--format", "json")
    assert len(json.loads(out)["quivers"]) == 6
    code, out, _ = run(capsys, "quivers", "-n", "3", "--format", "dot", "--apex", "1")
    assert out.count("digraph") == 2


def test_classes_n4(capsys):
    code, out, _ = run(capsys, "classes", "-n", "4")
    heads = [l for l in out.splitlines() if l.startswith("t=")]
    assert [h.split()[0] for h in heads] == ["t=0", "t=1"]
    assert "det=2" in heads[0] and "det=4" in heads[1]
    assert out.splitlines()[-1] == "classes: 2"
    code, out, _ = run(capsys, "classes", "-n", "4", "--format", "json")
    data = json.loads(out)
    assert [c["cartan_determinant"] for c in data["classes"]] == [2, 4]
    assert sum(c["size"] for c in data["classes"]) == 20


def test_cartan_n2(capsys):
    code, out, _ = run(capsys, "cartan", "-n", "2")
    assert out.splitlines() == ["1.1  t=0  det=2", "   2", "2.1  t=0  det=2", "   2"]
    code, out, _ = run(capsys, "cartan", "-n", "2", "--format", "json")
    data = json.loads(out)
    assert [m["entries"] for m in data["matrices"]] == [[[2]], [[2]]]


def test_pr_grid_n4(capsys):
    code, out, _ = run(capsys, "pr", "-n", "4", "--apex", "1")
    lines = out.splitlines()
    assert "\n".join(lines[:-1]) == REFERENCE_GRID_N4
    assert lines[-1] == "presented: 18  modules: 15 (formula 15)"
    code, out, _ = run(capsys, "pr", "-n", "4", "--format", "json")
    assert len(json.loads(out)["presented"]) == 18
    code, out, _ = run(capsys, "pr", "-n", "4", "--format", "dot")
    assert out.count("style=filled") == 18


def test_unwritable_path(capsys, tmp_path):
    target = tmp_path / "missing" / "out.txt"
    assert run(capsys, "enumerate", "-n", "3", "--out", str(target))[0] == 1


@pytest.mark.parametrize("argv", [["graph", "-n", "5", "--format", "dot"], ["quivers", "-n", "5", "--format", "json"], ["classes", "-n", "5"]])
def test_outputs_are_deterministic(capsys, argv):
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second and first


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "clustertube", "enumerate", "-n", "3"], capture_output=True, text=True, check=False
    )
    assert res.returncode == 0 and res.stdout.splitlines()[-1] == "count: 6"
