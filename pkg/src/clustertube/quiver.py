"""Quivers of endomorphism algebras of maximal rigid objects.

A quiver here is a vertex list plus an arrow multiset of ``(src, dst)``
pairs; a loop is an arrow ``(v, v)``.  :class:`QTilde` adds the loop vertex
``c`` and caches the oriented 3-cycles.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Hashable, Iterable, Optional

import networkx as nx

from .errors import InvariantViolation, PreconditionError
from .rigid import MaximalRigid, apex_of, standard_object
from .tube import Indec, indec


def _arrow_key(order):
    return lambda arr: (order[arr[0]], order[arr[1]])


class Quiver:
    """Finite quiver with hashable vertex labels; loops and multiple arrows allowed."""

    __slots__ = ("vertices", "arrows", "_order")

    def __init__(self, vertices: Iterable[Hashable], arrows: Iterable[tuple] = ()):
        self.vertices = tuple(vertices)
        self._order = {v: k for k, v in enumerate(self.vertices)}
        if len(self._order) != len(self.vertices):
            raise PreconditionError(f"duplicate vertex labels in {self.vertices}")
        arrows = [tuple(a) for a in arrows]
        for s, t in arrows:
            if s not in self._order or t not in self._order:
                raise PreconditionError(f"arrow {s!r}->{t!r} has an endpoint outside the quiver")
        self.arrows = tuple(sorted(arrows, key=_arrow_key(self._order)))

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and Counter(self.arrows) == Counter(
            other.arrows
        )

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(Counter(self.arrows).items())))

    def __repr__(self):
        arrows = ", ".join(f"{s}->{t}" for s, t in self.arrows)
        return f"Quiver([{', '.join(map(str, self.vertices))}]; {arrows})"

    def loops(self) -> list:
        return [s for s, t in self.arrows if s == t]

    def without_loops(self) -> "Quiver":
        return Quiver(self.vertices, [a for a in self.arrows if a[0] != a[1]])

    def neighbours(self, v) -> set:
        out = set()
        for s, t in self.arrows:
            if s == t:
                continue
            if s == v:
                out.add(t)
            elif t == v:
                out.add(s)
        return out

    def has_arrow(self, s, t) -> bool:
        return (s, t) in self.arrows

    def relabel(self, mapping: dict) -> "Quiver":
        f = lambda v: mapping.get(v, v)
        return Quiver([f(v) for v in self.vertices], [(f(s), f(t)) for s, t in self.arrows])

    def three_cycles(self) -> list[tuple]:
        """Oriented 3-cycles ``(u, v, w)`` meaning ``u->v->w->u``, each listed once
        starting from its earliest vertex."""
        arrows = set(a for a in self.arrows if a[0] != a[1])
        out = set()
        for u, v in arrows:
            for v2, w in arrows:
                if v2 == v and w != u and (w, u) in arrows:
                    cyc = (u, v, w)
                    k = min(range(3), key=lambda i: self._order[cyc[i]])
                    out.add(cyc[k:] + cyc[:k])
        return sorted(out, key=lambda c: tuple(self._order[x] for x in c))


def fz_mutate(Q: Quiver, i) -> Quiver:
    """Fomin-Zelevinsky mutation at ``i``."""
    if i not in Q.vertices:
        raise PreconditionError(f"{i!r} is not a vertex")
    if (i, i) in Q.arrows:
        raise PreconditionError(f"loop at {i!r}")
    if any((t, s) in Q.arrows for s, t in Q.arrows if i in (s, t) and s != t):
        raise PreconditionError(f"2-cycle at {i!r}")
    ins = [s for s, t in Q.arrows if t == i]
    outs = [t for s, t in Q.arrows if s == i]
    count = Counter(a for a in Q.arrows if i not in a)
    for u in ins:
        for v in outs:
            count[(u, v)] += 1
    # cancel 2-cycles
    for (u, v) in list(count):
        if u != v and count[(u, v)] and count.get((v, u)):
            m = min(count[(u, v)], count[(v, u)])
            count[(u, v)] -= m
            count[(v, u)] -= m
    arrows = list(count.elements())
    arrows += [(i, u) for u in ins] + [(v, i) for v in outs]
    return Quiver(Q.vertices, arrows)


@dataclass(frozen=True, eq=False)
class QTilde:
    quiver: Quiver
    c: Hashable

    def __post_init__(self):
        if self.c not in self.quiver.vertices:
            raise PreconditionError(f"loop vertex {self.c!r} not in quiver")

    def __eq__(self, other):
        if not isinstance(other, QTilde):
            return NotImplemented
        return self.c == other.c and self.quiver == other.quiver

    def __hash__(self):
        return hash((self.c, self.quiver))

    def __repr__(self):
        return f"QTilde(c={self.c}, {self.quiver!r})"

    @property
    def vertices(self):
        return self.quiver.vertices

    @cached_property
    def three_cycles(self) -> list[tuple]:
        return self.quiver.three_cycles()

    def relabel(self, mapping: dict) -> "QTilde":
        return QTilde(self.quiver.relabel(mapping), mapping.get(self.c, self.c))


def gamma_c(Q: Quiver, c) -> QTilde:
    if (c, c) in Q.arrows:
        raise PreconditionError(f"{c!r} already carries a loop")
    return QTilde(Quiver(Q.vertices, Q.arrows + ((c, c),)), c)


def delta_c(qt: QTilde) -> Quiver:
    arrows = list(qt.quiver.arrows)
    arrows.remove((qt.c, qt.c))
    return Quiver(qt.vertices, arrows)


def standard_quiver(n: int, a: int = 1) -> QTilde:
    """Quiver of ``(a,1)+...+(a,n-1)``: ``(a,i) -> (a,i+1)`` with the loop at ``(a,n-1)``."""
    if not 1 <= a <= n:
        raise PreconditionError(f"apex must lie in 1..{n}, got {a}")
    verts = [indec(n, a, i) for i in range(1, n)]
    arrows = list(zip(verts, verts[1:])) + [(verts[-1], verts[-1])]
    return QTilde(Quiver(verts, arrows), verts[-1])


def extended_mutate(qt: QTilde, i) -> QTilde:
    """Mutation inside the family: FZ away from ``c``; at ``c`` reverse the unique
    adjacent arrow, or the 3-cycle through ``c``; identity if ``c`` is isolated."""
    if i not in qt.vertices:
        raise PreconditionError(f"{i!r} is not a vertex")
    c = qt.c
    if i != c:
        return gamma_c(fz_mutate(delta_c(qt), i), c)
    nbrs = qt.quiver.neighbours(c)
    if len(nbrs) == 0:
        return qt
    if len(nbrs) == 1:
        flip = {a for a in qt.quiver.arrows if c in a and a[0] != a[1]}
    elif len(nbrs) == 2:
        cycles = [cyc for cyc in qt.three_cycles if c in cyc]
        if len(cycles) != 1:
            raise PreconditionError(f"{c!r} has two neighbours but is not on a unique 3-cycle")
        u, v, w = cycles[0]
        flip = {(u, v), (v, w), (w, u)}
    else:
        raise PreconditionError(f"loop vertex {c!r} has {len(nbrs)} neighbours")
    arrows = [(t, s) if (s, t) in flip else (s, t) for s, t in qt.quiver.arrows]
    return QTilde(Quiver(qt.vertices, arrows), c)


# ---------------------------------------------------------------------------
# membership in the family of loop quivers
# ---------------------------------------------------------------------------


def _underlying(Q: Quiver) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(Q.vertices)
    g.add_edges_from((s, t) for s, t in Q.arrows if s != t)
    return g


def validate_membership(qt: QTilde, n: int) -> tuple[bool, list[str]]:
    """Check the five defining axioms of the family; returns ``(ok, failures)``."""
    Q = qt.quiver
    failures: list[str] = []
    if len(Q.vertices) != n - 1:
        failures.append(f"size: {len(Q.vertices)} vertices, expected {n - 1}")

    plain = [a for a in Q.arrows if a[0] != a[1]]
    pairs = Counter(frozenset(a) for a in plain)
    cycles = Q.three_cycles()
    cycle_sets = {frozenset(c) for c in cycles}

    # (1) minimal cycles are oriented triangles; no multiple arrows or 2-cycles
    if any(m > 1 for m in pairs.values()):
        failures.append("axiom 1: multiple arrows or 2-cycle")
    for cyc in nx.chordless_cycles(_underlying(Q)):
        if len(cyc) != 3 or frozenset(cyc) not in cycle_sets:
            failures.append(f"axiom 1: minimal cycle {cyc} is not an oriented 3-cycle")

    def cycles_at(v):
        return [c for c in cycles if v in c]

    for v in Q.vertices:
        nb = Q.neighbours(v)
        through = cycles_at(v)
        # (2)
        if len(nb) > 4:
            failures.append(f"axiom 2: {v} has {len(nb)} neighbours")
        # (3)
        if len(nb) == 4:
            covered = [frozenset(c) - {v} for c in through]
            if len(through) != 2 or set().union(*covered) != nb:
                failures.append(f"axiom 3: neighbours of {v} do not split into two 3-cycles")
        # (4)
        if len(nb) == 3:
            if len(through) != 1:
                failures.append(f"axiom 4: {v} has 3 neighbours and {len(through)} 3-cycles")
    # (5)
    loops = Q.loops()
    if len(loops) != 1 or loops[0] != qt.c:
        failures.append(f"axiom 5: loops at {loops}, expected exactly one at {qt.c}")
    else:
        nb = Q.neighbours(qt.c)
        if len(nb) == 0 and n != 2:
            failures.append("axiom 5: isolated loop vertex with n != 2")
        elif len(nb) == 2 and not cycles_at(qt.c):
            failures.append("axiom 5: loop vertex has two neighbours but no 3-cycle")
        elif len(nb) > 2:
            failures.append(f"axiom 5: loop vertex has {len(nb)} neighbours")
    return not failures, failures


# ---------------------------------------------------------------------------
# quivers of maximal rigid objects
# ---------------------------------------------------------------------------


def replay(qt: QTilde, T: MaximalRigid, path: Iterable[Indec]) -> tuple[QTilde, MaximalRigid]:
    """Mutate ``T`` and its quiver in lockstep, relabelling each exchanged vertex."""
    from .mutation import mutate

    for R in path:
        T, edge = mutate(T, R)
        qt = extended_mutate(qt, R).relabel({R: edge.added})
    return qt, T


def quiver_of(T: MaximalRigid, graph=None) -> QTilde:
    """Quiver of ``End(T)``, obtained by replaying a simple mutation path from
    the standard object of ``T``'s wing."""
    from .mutation import mutation_path

    n = T.n
    a = apex_of(T)
    start = standard_object(n, a)
    path = mutation_path(start, T, graph)
    qt, end = replay(standard_quiver(n, a), start, path)
    if end != T:
        raise InvariantViolation("replayed path does not reach the target object")
    ok, why = validate_membership(qt, n)
    if not ok:
        raise InvariantViolation(f"quiver of {T.label()} fails membership: {why}")
    return qt


def all_quivers(n: int, graph=None) -> dict:
    """Quiver of every maximal rigid object, via one BFS per wing over simple edges."""
    from .mutation import exchange_graph

    g = graph or exchange_graph(n)
    adj = g.adjacency(simple_only=True)
    out = {}
    for a in range(1, n + 1):
        start = standard_object(n, a)
        out[start] = standard_quiver(n, a)
        queue = [start]
        while queue:
            nxt = []
            for T in queue:
                for e in sorted(adj[T], key=lambda e: (e.target, e.removed)):
                    if e.target not in out:
                        out[e.target] = extended_mutate(out[T], e.removed).relabel(
                            {e.removed: e.added}
                        )
                        nxt.append(e.target)
            queue = nxt
    for T, qt in out.items():
        ok, why = validate_membership(qt, n)
        if not ok:
            raise InvariantViolation(f"quiver of {T.label()} fails membership: {why}")
    return {T: out[T] for T in g.nodes}


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------


def _signature(Q: Quiver, v):
    outd = sum(1 for s, t in Q.arrows if s == v and t != v)
    ind = sum(1 for s, t in Q.arrows if t == v and s != v)
    return (outd, ind, Q.arrows.count((v, v)))


def find_isomorphism(Q1: Quiver, Q2: Quiver) -> Optional[dict]:
    """A vertex bijection carrying the arrow multiset of ``Q1`` onto ``Q2``, or None.

    Brute force over permutations, restricted to vertices with equal
    (out-degree, in-degree, loops) signatures.
    """
    if len(Q1.vertices) != len(Q2.vertices) or len(Q1.arrows) != len(Q2.arrows):
        return None
    s1 = {v: _signature(Q1, v) for v in Q1.vertices}
    s2 = {v: _signature(Q2, v) for v in Q2.vertices}
    if sorted(s1.values()) != sorted(s2.values()):
        return None
    target = Counter(Q2.arrows)
    verts = list(Q1.vertices)
    for perm in permutations(Q2.vertices):
        if any(s1[u] != s2[w] for u, w in zip(verts, perm)):
            continue
        m = dict(zip(verts, perm))
        if Counter((m[s], m[t]) for s, t in Q1.arrows) == target:
            return m
    return None


def quiver_iso(Q1, Q2) -> bool:
    if isinstance(Q1, QTilde):
        Q1 = Q1.quiver
    if isinstance(Q2, QTilde):
        Q2 = Q2.quiver
    return find_isomorphism(Q1, Q2) is not None


# ---------------------------------------------------------------------------
# potentials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuiverWithPotential:
    """Loop cubed plus every oriented 3-cycle (each with coefficient 1)."""

    qtilde: QTilde
    loop: Hashable
    cycles: tuple = field(default=())

    @property
    def terms(self) -> list:
        return [("loop^3", self.loop)] + [("cycle", c) for c in self.cycles]

    def jacobian_relations(self) -> list[tuple]:
        """Generators of the ideal: the loop squared and every 2-path inside a 3-cycle."""
        rels = [(self.loop, self.loop, self.loop)]
        for u, v, w in self.cycles:
            rels += [(u, v, w), (v, w, u), (w, u, v)]
        return rels

    def __str__(self):
        parts = [f"phi^3@{self.loop}"] + ["".join(f"{x}->" for x in c) + str(c[0]) for c in self.cycles]
        return " + ".join(parts)


def potential_of(qt: QTilde) -> QuiverWithPotential:
    return QuiverWithPotential(qt, qt.c, tuple(qt.three_cycles))
