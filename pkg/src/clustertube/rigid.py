"""Maximal rigid objects of C_n, wings and subwing triples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InvariantViolation, PreconditionError
from .tube import Indec, check_rank, compatible, indec, is_rigid, rigid_indecs, shift


@dataclass(frozen=True, order=True)
class MaximalRigid:
    """A basic maximal rigid object, stored as its sorted summand tuple."""

    n: int
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @property
    def apex(self) -> int:
        return apex_of(self)

    def __contains__(self, x: Indec) -> bool:
        return x in self.summands

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def label(self) -> str:
        return "+".join(str(x) for x in self.summands)

    def shifted(self, k: int = 1) -> "MaximalRigid":
        return MaximalRigid(self.n, tuple(shift(self.n, x, k) for x in self.summands))


def make_rigid(n: int, pairs: Iterable) -> MaximalRigid:
    """Convenience constructor from ``(a, b)`` pairs (socles read mod n)."""
    check_rank(n)
    return MaximalRigid(n, tuple(p if isinstance(p, Indec) else indec(n, *p) for p in pairs))


def standard_object(n: int, a: int = 1) -> MaximalRigid:
    """``(a,1) + (a,2) + ... + (a,n-1)``."""
    return MaximalRigid(n, tuple(indec(n, a, b) for b in range(1, n)))


def wing_members(n: int, apex: Indec) -> list[Indec]:
    """Indecomposables in the AR-triangle below ``apex = (a, m)``:
    all ``(a+i, j)`` with ``i >= 0, j >= 1, i + j <= m``."""
    if apex.length > n - 1:
        raise PreconditionError(f"wing apex {apex!r} is not rigid for n={n}")
    m = apex.length
    return sorted({indec(n, apex.socle + i, j) for i in range(m) for j in range(1, m - i + 1)})


def in_wing(n: int, apex: Indec, x: Indec) -> bool:
    offset = (x.socle - apex.socle) % n
    return offset + x.length <= apex.length


def apex_of(T: MaximalRigid) -> int:
    tops = [x for x in T.summands if x.length == T.n - 1]
    if len(tops) != 1:
        raise InvariantViolation(
            f"expected exactly one summand of length {T.n - 1} in {T.summands}, found {len(tops)}"
        )
    return tops[0].socle


def _wing_search(n: int, a: int) -> list[MaximalRigid]:
    top = indec(n, a, n - 1)
    pool = [x for x in wing_members(n, top) if x != top]
    found: list[MaximalRigid] = []

    def extend(chosen: list[Indec], start: int) -> None:
        if len(chosen) == n - 1:
            found.append(MaximalRigid(n, tuple(chosen)))
            return
        # not enough candidates left to reach n-1 summands
        if len(chosen) + len(pool) - start < n - 1:
            return
        for k in range(start, len(pool)):
            x = pool[k]
            if all(compatible(n, x, y) for y in chosen):
                chosen.append(x)
                extend(chosen, k + 1)
                chosen.pop()

    extend([top], 0)
    return found


def enumerate_maximal_rigid(n: int, apex: Optional[int] = None) -> list[MaximalRigid]:
    """All basic maximal rigid objects of C_n in canonical order.

    Each one lives in the wing of some ``(a, n-1)`` and contains it, so the
    search runs wing by wing over rigid subsets of size ``n - 1``.
    """
    check_rank(n)
    apexes = range(1, n + 1) if apex is None else [(apex - 1) % n + 1]
    return sorted({T for a in apexes for T in _wing_search(n, a)})


def is_maximal_rigid(T: MaximalRigid) -> bool:
    n = T.n
    if not is_rigid(n, T.summands):
        return False
    return not any(
        x not in T and all(compatible(n, x, y) for y in T.summands) for x in rigid_indecs(n)
    )


def validate_maximal_rigid(T: MaximalRigid) -> None:
    """Raise :class:`InvariantViolation` unless ``T`` satisfies every invariant."""
    n = T.n
    if len(T.summands) != n - 1 or len(set(T.summands)) != n - 1:
        raise InvariantViolation(f"{T.label()} does not have {n - 1} distinct summands")
    a = apex_of(T)
    top = indec(n, a, n - 1)
    outside = [x for x in T.summands if not in_wing(n, top, x)]
    if outside:
        raise InvariantViolation(f"{outside} lie outside the wing of {top!r}")
    if not is_maximal_rigid(T):
        raise InvariantViolation(f"{T.label()} is not maximal rigid")


@dataclass(frozen=True)
class SubwingTriple:
    apex_obj: Indec
    left: Optional[Indec]
    right: Optional[Indec]
    b: int


def subwing_triple(T: MaximalRigid) -> SubwingTriple:
    """``((a,n-1); (a,b), (a+b+1,n-b-2))`` with ``b`` maximal such that
    ``(a,b)`` is a summand of length < n-1 (``b = 0`` if none)."""
    n = T.n
    a = apex_of(T)
    b = max((x.length for x in T.summands if x.socle == a and x.length < n - 1), default=0)
    left = indec(n, a, b) if b > 0 else None
    right = indec(n, a + b + 1, n - b - 2) if b < n - 2 else None

    # the right member is the longest summand ending at the top of the wing
    right_lengths = [
        x.length
        for x in T.summands
        if x.length < n - 1 and (x.socle - (a + n - 1 - x.length)) % n == 0
    ]
    if max(right_lengths, default=0) != n - b - 2:
        raise InvariantViolation(f"subwing split of {T.label()} is inconsistent (b={b})")
    for x in T.summands:
        if x.length == n - 1:
            continue
        in_left = left is not None and in_wing(n, left, x)
        in_right = right is not None and in_wing(n, right, x)
        if not (in_left or in_right):
            raise InvariantViolation(f"{x!r} of {T.label()} lies in neither subwing")
    return SubwingTriple(indec(n, a, n - 1), left, right, b)
