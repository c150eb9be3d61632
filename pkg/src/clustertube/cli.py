"""Command-line interface.

    clustertube enumerate -n 4
    clustertube graph -n 4 --format dot --out c4.dot
    clustertube quivers -n 3 --format json
    clustertube classes -n 4
    clustertube pr -n 4 --apex 1
    clustertube cartan -n 2

Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .derived import cartan_determinant, cartan_matrix, count_3_cycles, derived_classes
from .errors import InvariantViolation, PreconditionError
from .mutation import exchange_graph
from .presentability import in_pr_apex, module_count, module_count_enumerated, region_grid
from .quiver import all_quivers
from .rigid import enumerate_maximal_rigid
from .tube import all_indecs, indec
from . import serialize

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3
FORMATS = ("dot", "json", "text")


@dataclass
class RunConfig:
    command: str
    n: int
    fmt: str = "text"
    out: Optional[str] = None
    apex: Optional[int] = None

    def validate(self) -> None:
        max_rank = int(os.environ.get("CT_MAX_RANK", "12"))
        if self.n < 2:
            raise PreconditionError(f"rank must be >= 2, got {self.n}")
        if self.n > max_rank:
            raise PreconditionError(f"rank {self.n} exceeds CT_MAX_RANK={max_rank}")
        if self.fmt not in FORMATS:
            raise PreconditionError(f"unknown format {self.fmt!r}")
        if self.apex is not None and not 1 <= self.apex <= self.n:
            raise PreconditionError(f"apex must lie in 1..{self.n}")


def cmd_enumerate(cfg: RunConfig) -> str:
    objs = enumerate_maximal_rigid(cfg.n, cfg.apex)
    if cfg.fmt == "json":
        return serialize.dumps(
            {"n": cfg.n, "objects": [[str(x) for x in T] for T in objs], "count": len(objs)}
        )
    lines = [f"{T.label()}  apex={T.apex}" for T in objs]
    lines.append(f"count: {len(objs)}")
    return "\n".join(lines) + "\n"


def cmd_graph(cfg: RunConfig) -> str:
    g = exchange_graph(cfg.n)
    if cfg.fmt == "json":
        return serialize.dumps(serialize.graph_to_json(g))
    if cfg.fmt == "dot":
        return serialize.graph_to_dot(g)
    lines = [f"{e.source.label()} -- {e.target.label()}  {'simple' if e.simple else 'non-simple'}" for e in g.edges]
    lines.append(f"nodes: {len(g.nodes)}  edges: {len(g.edges)}")
    return "\n".join(lines) + "\n"


def cmd_quivers(cfg: RunConfig) -> str:
    qs = all_quivers(cfg.n)
    items = [(T, q) for T, q in qs.items() if cfg.apex is None or T.apex == cfg.apex]
    if cfg.fmt == "json":
        return serialize.dumps(
            {"n": cfg.n, "quivers": [{"object": T.label(), "quiver": serialize.quiver_to_json(q)} for T, q in items]}
        )
    if cfg.fmt == "dot":
        return "".join(serialize.quiver_to_dot(q, T.label()) for T, q in items)
    return "".join(f"{T.label()}: {serialize.quiver_to_text(q)}\n" for T, q in items)


def cmd_classes(cfg: RunConfig) -> str:
    qs = all_quivers(cfg.n)
    classes = derived_classes(cfg.n, qs)
    if cfg.fmt == "json":
        return serialize.dumps(serialize.classes_to_json(cfg.n, classes, qs))
    lines = []
    for t, members in classes.items():
        det = cartan_determinant(cartan_matrix(qs[members[0]]))
        lines.append(f"t={t}  size={len(members)}  det={det}")
        lines += [f"  {T.label()}" for T in members]
    lines.append(f"classes: {len(classes)}")
    return "\n".join(lines) + "\n"


def cmd_pr(cfg: RunConfig) -> str:
    apex = cfg.apex or 1
    presented = [x for x in all_indecs(cfg.n, 2 * (cfg.n - 1)) if in_pr_apex(cfg.n, apex, x)]
    if cfg.fmt == "json":
        return serialize.dumps({"n": cfg.n, "apex": apex, "presented": [str(x) for x in presented]})
    if cfg.fmt == "dot":
        lines = [f"graph pr_C{cfg.n}_apex{apex} {{", "  node [shape=circle, label=\"\"];"]
        for b in range(1, 2 * cfg.n):
            for a in range(1, cfg.n + 1):
                x = indec(cfg.n, a, b)
                style = "filled" if in_pr_apex(cfg.n, apex, x) else "solid"
                col = 2 * (a - 1) + (b - 1)
                lines.append(f'  "{x}" [style={style}, pos="{col},{b}!"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    lines = region_grid(cfg.n, apex)
    lines.append(
        f"presented: {len(presented)}  modules: {module_count_enumerated(cfg.n, apex)}"
        f" (formula {module_count(cfg.n)})"
    )
    return "\n".join(lines) + "\n"


def cmd_cartan(cfg: RunConfig) -> str:
    qs = all_quivers(cfg.n)
    rows = []
    for T, q in qs.items():
        if cfg.apex is not None and T.apex != cfg.apex:
            continue
        C = cartan_matrix(q)
        rows.append((T, C, cartan_determinant(C), count_3_cycles(q)))
    if cfg.fmt == "json":
        return serialize.dumps(
            {
                "n": cfg.n,
                "matrices": [
                    {
                        "object": T.label(),
                        "order": [serialize.encode_label(v) for v in C.order],
                        "entries": C.as_lists(),
                        "determinant": det,
                        "t": t,
                    }
                    for T, C, det, t in rows
                ],
            }
        )
    out = []
    for T, C, det, t in rows:
        out.append(f"{T.label()}  t={t}  det={det}")
        out += ["  " + " ".join(f"{v:2d}" for v in r) for r in C.entries]
    return "\n".join(out) + "\n"


HELP = {
    "enumerate": "list the maximal rigid objects",
    "graph": "exchange graph of maximal rigid objects",
    "quivers": "quiver of each maximal rigid object",
    "classes": "derived-equivalence classes by 3-cycle count",
    "pr": "indecomposables finitely presented by a wing (F-region grid)",
    "cartan": "Cartan matrices and determinants",
}

COMMANDS = {
    "enumerate": cmd_enumerate,
    "graph": cmd_graph,
    "quivers": cmd_quivers,
    "classes": cmd_classes,
    "pr": cmd_pr,
    "cartan": cmd_cartan,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clustertube", description="Maximal rigid objects of the cluster tube C_n")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name])
        p.add_argument("-n", "--rank", type=int, required=True)
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", default=None, help="write to this file instead of stdout")
        p.add_argument("--apex", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(args.command, args.rank, args.format, args.out, args.apex)
    try:
        cfg.validate()
        text = COMMANDS[cfg.command](cfg)
    except PreconditionError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"INVARIANT VIOLATION: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    try:
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
