"""Derived-equivalence invariants of the endomorphism algebras.

The algebra of a quiver ``Q`` in the family is ``kQ / I`` where ``I`` is
generated by the loop squared and every 2-path inside an oriented 3-cycle.
Two such algebras are derived equivalent exactly when their quivers have
the same number of 3-cycles; the Cartan determinant ``2^(t+1)`` separates
the classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import InvariantViolation, PreconditionError
from .quiver import QTilde, Quiver, all_quivers, extended_mutate, validate_membership
from .rigid import MaximalRigid
from .tube import check_rank


class InvalidAlgebraError(InvariantViolation):
    """Relation-avoiding paths exceed the length cap: the quotient is not finite dimensional."""


def count_3_cycles(qt: QTilde) -> int:
    return len(qt.three_cycles)


@dataclass(frozen=True)
class CartanMatrix:
    order: tuple
    entries: tuple  # entries[i][j] = number of nonzero paths from order[i] to order[j]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def relation_avoiding_paths(qt: QTilde) -> list[tuple]:
    """Every nonzero path of ``kQ/I`` as a vertex sequence (trivial paths included)."""
    arrows = sorted(set(qt.quiver.arrows), key=lambda a: (qt.vertices.index(a[0]), qt.vertices.index(a[1])))
    forbidden = {(u, v, w) for u, v, w in qt.three_cycles}
    forbidden |= {(v, w, u) for u, v, w in qt.three_cycles}
    forbidden |= {(w, u, v) for u, v, w in qt.three_cycles}
    forbidden.add((qt.c, qt.c, qt.c))
    cap = len(qt.quiver.arrows) + 1
    out = []
    stack = [(v,) for v in reversed(qt.vertices)]
    while stack:
        path = stack.pop()
        if len(path) - 1 > cap:
            raise InvalidAlgebraError(f"path {path} longer than {cap} arrows")
        out.append(path)
        last = path[-1]
        for s, t in reversed(arrows):
            if s != last:
                continue
            if len(path) >= 2 and (path[-2], s, t) in forbidden:
                continue
            stack.append(path + (t,))
    return out


def cartan_matrix(qt: QTilde) -> CartanMatrix:
    idx = {v: k for k, v in enumerate(qt.vertices)}
    m = [[0] * len(idx) for _ in idx]
    for p in relation_avoiding_paths(qt):
        m[idx[p[0]]][idx[p[-1]]] += 1
    return CartanMatrix(tuple(qt.vertices), tuple(tuple(r) for r in m))


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(map(int, r)) for r in rows]
    size = len(a)
    if size == 0:
        return 1
    if any(len(r) != size for r in a):
        raise PreconditionError("matrix is not square")
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def cartan_determinant(C) -> int:
    rows = C.entries if isinstance(C, CartanMatrix) else C
    return bareiss_determinant(rows)


def derived_equivalent(q1: QTilde, q2: QTilde) -> bool:
    if len(q1.vertices) != len(q2.vertices):
        raise PreconditionError("quivers belong to different ranks")
    return count_3_cycles(q1) == count_3_cycles(q2)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------


def _triangles(bases: list, peaks: list) -> list[tuple]:
    # base arrow right -> left, left -> peak -> right
    arrows = []
    for left, right, peak in zip(bases, bases[1:], peaks):
        arrows += [(right, left), (left, peak), (peak, right)]
    return arrows


def normal_form(n: int, t: int, variant: int = 1, r: int | None = None, s: int | None = None) -> QTilde:
    """The two reference quivers with ``t`` three-cycles on ``n - 1`` vertices.

    Variant 1: vertices ``c, 2, ..., m`` (``m = n-1-t``) along a line with the
    loop at ``c``; arrows ``c -> 2 -> ...`` up to vertex ``m - t``, then ``t``
    triangles over the base vertices ``m-t, ..., m`` with peaks ``m+1, ..., n-1``.

    Variant 2: a line ``1 -> ... -> r`` (``r = n-1-2t``), triangles over the base
    vertices ``r, r+1, ..., r+t``, and the loop on the peak of the ``s``-th
    triangle, which is labelled ``"c"``.  The remaining peaks are labelled
    ``r+t+1, r+t+2, ...`` from left to right.
    """
    check_rank(n)
    if t < 0 or n - 1 < 2 * t + 1:
        raise PreconditionError(f"no normal form with t={t} on {n - 1} vertices")
    if variant == 1:
        m = n - 1 - t
        line = ["c"] + list(range(2, m + 1))
        peaks = list(range(m + 1, n))
        head = line[: m - t]
        arrows = list(zip(head, head[1:])) + _triangles(line[m - t - 1 :], peaks)
        verts = line + peaks
    elif variant == 2:
        expect_r = n - 1 - 2 * t
        if r is None:
            r = expect_r
        if t < 1 or r != expect_r or s is None or not 1 <= s <= t:
            raise PreconditionError(f"inconsistent variant-2 parameters n={n} t={t} r={r} s={s}")
        line = list(range(1, r + 1))
        bases = list(range(r, r + t + 1))
        labels = iter(range(r + t + 1, n))
        peaks = ["c" if j == s else next(labels) for j in range(1, t + 1)]
        arrows = list(zip(line, line[1:])) + _triangles(bases, peaks)
        verts = list(range(1, r + t + 1)) + peaks
    else:
        raise PreconditionError(f"variant must be 1 or 2, got {variant}")
    qt = QTilde(Quiver(verts, arrows + [("c", "c")]), "c")
    ok, why = validate_membership(qt, n)
    if not ok:
        raise InvariantViolation(f"normal form fails membership: {why}")
    return qt


def reduction_sequence(r: int, s: int) -> list:
    """Mutation sequence taking the variant-2 normal form to variant 1, written
    as ``(r, r-1, ..., 2, c, 2, ..., r; c, r+1, ..., r+s-1, c)`` and meant to be
    applied from the right."""
    down = list(range(r, 1, -1))
    return down + ["c"] + down[::-1] + ["c"] + list(range(r + 1, r + s)) + ["c"]


def apply_mutation_sequence(qt: QTilde, seq: Iterable[Hashable], trace: list | None = None) -> QTilde:
    """Left fold of :func:`extended_mutate` over ``seq``."""
    for v in seq:
        if v not in qt.vertices:
            raise PreconditionError(f"{v!r} is not a vertex of the current quiver")
        qt = extended_mutate(qt, v)
        if trace is not None:
            trace.append(qt)
    return qt


def derived_classes(n: int, quivers: dict | None = None) -> dict[int, list[MaximalRigid]]:
    """Maximal rigid objects grouped by the 3-cycle count of their quiver."""
    qs = quivers if quivers is not None else all_quivers(n)
    classes: dict[int, list] = {}
    for T, qt in qs.items():
        classes.setdefault(count_3_cycles(qt), []).append(T)
    return {t: sorted(v) for t, v in sorted(classes.items())}
