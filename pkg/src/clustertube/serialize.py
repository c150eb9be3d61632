"""JSON and DOT encodings for exchange graphs, quivers and class reports.

Summands are written in the compact ``"a.b"`` notation everywhere, so every
output is plain ASCII and byte-stable for a fixed input.
"""

from __future__ import annotations

import json
import re

from .derived import cartan_determinant, cartan_matrix, count_3_cycles
from .mutation import ExchangeGraph, MutationEdge
from .quiver import QTilde, Quiver
from .rigid import MaximalRigid
from .tube import Indec, parse_indec

_INDEC_RE = re.compile(r"^\d+\.\d+$")


def encode_label(v):
    if isinstance(v, Indec):
        return str(v)
    if isinstance(v, (int, str)):
        return v
    raise TypeError(f"cannot serialise vertex label {v!r}")


def decode_label(v):
    if isinstance(v, str) and _INDEC_RE.match(v):
        return parse_indec(v)
    return v


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# exchange graphs
# ---------------------------------------------------------------------------


def graph_to_json(g: ExchangeGraph) -> dict:
    order = g.index()
    return {
        "n": g.n,
        "nodes": [[str(x) for x in T.summands] for T in g.nodes],
        "edges": [
            {
                "source": order[e.source],
                "target": order[e.target],
                "removed": str(e.removed),
                "added": str(e.added),
                "simple": e.simple,
            }
            for e in g.edges
        ],
    }


def graph_from_json(data: dict) -> ExchangeGraph:
    n = data["n"]
    nodes = [MaximalRigid(n, tuple(parse_indec(s) for s in node)) for node in data["nodes"]]
    edges = [
        MutationEdge(
            nodes[e["source"]],
            nodes[e["target"]],
            parse_indec(e["removed"]),
            parse_indec(e["added"]),
            bool(e["simple"]),
        )
        for e in data["edges"]
    ]
    return ExchangeGraph(n, nodes, edges)


def graph_to_dot(g: ExchangeGraph) -> str:
    order = g.index()
    lines = [f"graph exchange_C{g.n} {{", "  node [shape=box];"]
    for T in g.nodes:
        lines.append(f'  n{order[T]} [label="{T.label()}", apex={T.apex}];')
    for e in g.edges:
        style = "solid" if e.simple else "dashed"
        lines.append(
            f'  n{order[e.source]} -- n{order[e.target]} [style={style}, label="{e.removed}/{e.added}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# quivers
# ---------------------------------------------------------------------------


def quiver_to_json(qt: QTilde) -> dict:
    return {
        "vertices": [encode_label(v) for v in qt.vertices],
        "arrows": [[encode_label(s), encode_label(t)] for s, t in qt.quiver.arrows],
        "loop_vertex": encode_label(qt.c),
    }


def quiver_from_json(data: dict) -> QTilde:
    verts = [decode_label(v) for v in data["vertices"]]
    arrows = [(decode_label(s), decode_label(t)) for s, t in data["arrows"]]
    return QTilde(Quiver(verts, arrows), decode_label(data["loop_vertex"]))


def quiver_to_dot(qt: QTilde, name: str = "quiver") -> str:
    ids = {v: f"v{k}" for k, v in enumerate(qt.vertices)}
    lines = [f'digraph "{name}" {{']
    for v in qt.vertices:
        lines.append(f'  {ids[v]} [label="{encode_label(v)}"];')
    for s, t in qt.quiver.arrows:
        attr = ' [label="phi"]' if s == t else ""
        lines.append(f"  {ids[s]} -> {ids[t]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_text(qt: QTilde) -> str:
    arrows = ", ".join(
        f"{encode_label(s)}->{encode_label(t)}" for s, t in qt.quiver.arrows if s != t
    )
    return f"loop at {encode_label(qt.c)}; arrows: {arrows or '(none)'}; 3-cycles: {count_3_cycles(qt)}"


# ---------------------------------------------------------------------------
# derived classes
# ---------------------------------------------------------------------------


def classes_to_json(n: int, classes: dict, quivers: dict) -> dict:
    out = []
    for t, members in classes.items():
        rep = quivers[members[0]]
        out.append(
            {
                "t": t,
                "size": len(members),
                "cartan_determinant": cartan_determinant(cartan_matrix(rep)),
                "representative": members[0].label(),
                "representative_quiver": quiver_to_json(rep),
            }
        )
    return {"n": n, "classes": out}
