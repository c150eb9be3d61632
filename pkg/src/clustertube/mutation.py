"""Mutation of maximal rigid objects and the exchange graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InvariantViolation, PreconditionError
from .rigid import MaximalRigid, apex_of, enumerate_maximal_rigid, standard_object, subwing_triple
from .tube import Indec, check_rank, compatible, hom_dim_cluster, indec, rigid_indecs, shift


@dataclass(frozen=True)
class MutationEdge:
    source: MaximalRigid
    target: MaximalRigid
    removed: Indec
    added: Indec
    simple: bool

    def reversed(self) -> "MutationEdge":
        return MutationEdge(self.target, self.source, self.added, self.removed, self.simple)


def complements(T: MaximalRigid, R: Indec) -> list[Indec]:
    """Every rigid indecomposable completing ``T`` minus ``R`` to a maximal rigid object."""
    n = T.n
    rest = [x for x in T.summands if x != R]
    return [
        x
        for x in rigid_indecs(n)
        if x not in rest and all(compatible(n, x, y) for y in rest)
    ]


def nonsimple_partner(T: MaximalRigid) -> Indec:
    """The complement replacing ``(a, n-1)``: ``(a+b+1, n-1)`` for the subwing triple's ``b``."""
    triple = subwing_triple(T)
    return indec(T.n, triple.apex_obj.socle + triple.b + 1, T.n - 1)


def mutate(T: MaximalRigid, R: Indec) -> tuple[MaximalRigid, MutationEdge]:
    n = T.n
    if R not in T:
        raise PreconditionError(f"{R!r} is not a summand of {T.label()}")
    cands = complements(T, R)
    if len(cands) != 2 or R not in cands:
        raise InvariantViolation(
            f"mutating {T.label()} at {R!r}: expected complements {{R, R'}}, got {cands}"
        )
    R2 = cands[0] if cands[1] == R else cands[1]
    simple = R.length < n - 1
    if not simple:
        fast = nonsimple_partner(T)
        if fast != R2:
            raise InvariantViolation(f"non-simple formula gives {fast!r}, search gives {R2!r}")
    if simple != (R2.length < n - 1):
        raise InvariantViolation(f"lengths of {R!r} and {R2!r} disagree on simplicity")
    T2 = MaximalRigid(n, tuple(x for x in T.summands if x != R) + (R2,))
    return T2, MutationEdge(T, T2, R, R2, simple)


def is_simple(edge: MutationEdge) -> bool:
    return edge.removed.length < edge.source.n - 1


def exchange_dims(edge: MutationEdge) -> tuple[int, int]:
    """``(dim Hom_C(R, Sigma R'), dim Hom_C(R', Sigma R))``."""
    n = edge.source.n
    R, R2 = edge.removed, edge.added
    return (
        hom_dim_cluster(n, R, shift(n, R2, 1)),
        hom_dim_cluster(n, R2, shift(n, R, 1)),
    )


@dataclass
class ExchangeGraph:
    n: int
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    def index(self) -> dict:
        return {T: k for k, T in enumerate(self.nodes)}

    def adjacency(self, simple_only: bool = False) -> dict:
        adj = {T: [] for T in self.nodes}
        for e in self.edges:
            if simple_only and not e.simple:
                continue
            adj[e.source].append(e)
            adj[e.target].append(e.reversed())
        return adj

    def to_networkx(self, simple_only: bool = False):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        for e in self.edges:
            if e.simple or not simple_only:
                g.add_edge(e.source, e.target)
        return g


def exchange_graph(n: int) -> ExchangeGraph:
    """BFS closure of :func:`mutate` from ``(1,1)+...+(1,n-1)``.

    Nodes come out in canonical order; each undirected edge is stored once,
    oriented from the canonically smaller endpoint.
    """
    check_rank(n)
    start = standard_object(n, 1)
    seen = {start}
    frontier = [start]
    edges: dict = {}
    while frontier:
        nxt = set()
        for T in sorted(frontier):
            for R in T.summands:
                T2, e = mutate(T, R)
                key = frozenset((T, T2))
                if key not in edges:
                    edges[key] = e if T < T2 else e.reversed()
                if T2 not in seen:
                    seen.add(T2)
                    nxt.add(T2)
        frontier = sorted(nxt)
    nodes = sorted(seen)
    order = {T: k for k, T in enumerate(nodes)}
    edge_list = sorted(edges.values(), key=lambda e: (order[e.source], order[e.target]))
    return ExchangeGraph(n, nodes, edge_list)


def _bfs_path(adj, start, goal):
    prev = {start: None}
    queue = deque([start])
    while queue:
        T = queue.popleft()
        if T == goal:
            break
        for e in sorted(adj[T], key=lambda e: (e.target, e.removed)):
            if e.target not in prev:
                prev[e.target] = e
                queue.append(e.target)
    if goal not in prev:
        return None
    path = []
    cur = goal
    while prev[cur] is not None:
        path.append(prev[cur])
        cur = prev[cur].source
    return path[::-1]


def mutation_path_edges(
    T_from: MaximalRigid, T_to: MaximalRigid, graph: ExchangeGraph | None = None
) -> list[MutationEdge]:
    if T_from.n != T_to.n:
        raise PreconditionError("objects have different ranks")
    if T_from == T_to:
        return []
    g = graph or exchange_graph(T_from.n)
    same_wing = apex_of(T_from) == apex_of(T_to)
    path = _bfs_path(g.adjacency(simple_only=same_wing), T_from, T_to)
    if path is None:
        raise InvariantViolation(f"no path from {T_from.label()} to {T_to.label()}")
    return path


def mutation_path(
    T_from: MaximalRigid, T_to: MaximalRigid, graph: ExchangeGraph | None = None
) -> list[Indec]:
    """Summands to mutate at, in order, along a shortest path.

    Within one wing the search is restricted to simple edges, so the path
    never leaves the wing.
    """
    return [e.removed for e in mutation_path_edges(T_from, T_to, graph)]


def check_graph_consistent(graph: ExchangeGraph) -> None:
    """Raise if the node set differs from the direct enumeration or regularity fails."""
    n = graph.n
    if graph.nodes != enumerate_maximal_rigid(n):
        raise InvariantViolation("exchange graph nodes differ from the enumeration")
    degree = {T: 0 for T in graph.nodes}
    for e in graph.edges:
        degree[e.source] += 1
        degree[e.target] += 1
    if any(d != n - 1 for d in degree.values()):
        raise InvariantViolation("exchange graph is not (n-1)-regular")
