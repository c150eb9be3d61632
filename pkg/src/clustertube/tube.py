"""Indecomposable objects of the tube T_n and the cluster tube C_n.

An indecomposable ``(a, b)`` is the uniserial nilpotent representation of
the cyclic quiver with ``n`` vertices (arrows ``i -> i-1``) whose socle is
the simple at vertex ``a`` and whose length is ``b``.  The same pair labels
an object of C_n through the fundamental domain.

Hom dimensions in T_n are computed by solving the intertwining equations
exactly over the rationals; everything else is derived from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import PreconditionError


def check_rank(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise PreconditionError(f"rank must be an integer >= 2, got {n!r}")
    return n


@dataclass(frozen=True, order=True)
class Indec:
    """Indecomposable ``(socle, length)`` with the socle already reduced to 1..n."""

    socle: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise PreconditionError(f"length must be >= 1, got {self.length}")
        if self.socle < 1:
            raise PreconditionError(f"socle must be normalized to 1..n, got {self.socle}")

    def __str__(self) -> str:
        return f"{self.socle}.{self.length}"

    def __repr__(self) -> str:
        return f"({self.socle},{self.length})"


def indec(n: int, a: int, b: int) -> Indec:
    """Build ``(a, b)``, reading the socle modulo ``n``."""
    return Indec((a - 1) % n + 1, b)


def parse_indec(text: str, n: int | None = None) -> Indec:
    """Parse ``"a.b"`` (the compact notation used in DOT/JSON output)."""
    try:
        a_s, b_s = text.strip().split(".")
        a, b = int(a_s), int(b_s)
    except ValueError:
        raise PreconditionError(f"cannot parse indecomposable from {text!r}") from None
    return indec(n, a, b) if n is not None else Indec(a, b)


ObjectSum = tuple  # canonical (sorted) tuple of Indec; () is the zero object


def object_sum(summands: Iterable[Indec]) -> ObjectSum:
    return tuple(sorted(summands))


def shift(n: int, x: Indec, k: int = 1) -> Indec:
    """Apply ``Sigma^k = tau^k``: ``(a, b) -> (a - k, b)``."""
    return indec(n, x.socle - k, x.length)


def loewy_length(summands: Iterable[Indec]) -> int:
    return max((x.length for x in summands), default=0)


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix over Q by Gaussian elimination on Fractions."""
    mat = [[Fraction(v) for v in row] for row in rows if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col] / prow[col]
                mat[r] = [u - f * v for u, v in zip(mat[r], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _hom_dim_linear(n: int, x: Indec, y: Indec) -> int:
    # Basis e_0..e_{b-1} of x with e_j at vertex a+j (e_0 spans the socle);
    # the arrows act by e_j -> e_{j-1}, e_0 -> 0.  Likewise for y.
    # An intertwiner has F[j][i] (coefficient of y's e_j in f(e_i)) free
    # only when both basis vectors sit at the same vertex.
    a, b, c, d = x.socle, x.length, y.socle, y.length
    free = [(j, i) for j, i in product(range(d), range(b)) if (a + i - c - j) % n == 0]
    if not free:
        return 0
    col = {key: k for k, key in enumerate(free)}
    rows = []
    # f(x e_i) = x f(e_i): coefficient of e_j gives F[j][i-1] = F[j+1][i]
    for i, j in product(range(b), range(d)):
        row = [0] * len(free)
        if i >= 1 and (j, i - 1) in col:
            row[col[(j, i - 1)]] += 1
        if j + 1 < d and (j + 1, i) in col:
            row[col[(j + 1, i)]] -= 1
        if any(row):
            rows.append(row)
    return len(free) - rational_rank(rows)


@lru_cache(maxsize=None)
def hom_dim_tube(n: int, x: Indec, y: Indec) -> int:
    """``dim Hom_{T_n}(x, y)`` from the intertwining equations."""
    return _hom_dim_linear(n, x, y)


def hom_dim_tube_closed(n: int, x: Indec, y: Indec) -> int:
    """Closed form: count images, i.e. lengths ``l`` for which the length-l
    quotient of ``x`` is isomorphic to the length-l submodule of ``y``."""
    top = x.socle + x.length
    return sum(1 for l in range(1, min(x.length, y.length) + 1) if (top - l - y.socle) % n == 0)


def ext1_dim_tube(n: int, x: Indec, y: Indec) -> int:
    """``dim Ext^1_{T_n}(x, y) = dim Hom(y, tau x)`` (Serre duality)."""
    return hom_dim_tube(n, y, shift(n, x, 1))


def hom_dim_cluster(n: int, m: Indec, k: Indec) -> int:
    """``dim Hom_{C_n}(m, k) = dim Hom_T(m, k) + dim Ext^1_T(m, tau^{-1} k)``."""
    return hom_dim_tube(n, m, k) + ext1_dim_tube(n, m, shift(n, k, -1))


def is_rigid_indec(n: int, x: Indec) -> bool:
    return x.length <= n - 1


@lru_cache(maxsize=None)
def compatible(n: int, x: Indec, y: Indec) -> bool:
    """True iff ``Hom_C(x, Sigma y)`` and ``Hom_C(y, Sigma x)`` both vanish."""
    return (
        hom_dim_cluster(n, x, shift(n, y, 1)) == 0
        and hom_dim_cluster(n, y, shift(n, x, 1)) == 0
    )


def is_rigid(n: int, summands: Iterable[Indec]) -> bool:
    items = list(summands)
    return all(
        hom_dim_cluster(n, x, shift(n, y, 1)) == 0 for x, y in product(items, repeat=2)
    )


def all_indecs(n: int, max_length: int) -> list[Indec]:
    """Every ``(a, b)`` with ``1 <= a <= n`` and ``1 <= b <= max_length``, canonically ordered."""
    return [Indec(a, b) for a in range(1, n + 1) for b in range(1, max_length + 1)]


@lru_cache(maxsize=None)
def _rigid_indecs(n: int) -> tuple:
    return tuple(all_indecs(n, n - 1))


def rigid_indecs(n: int) -> list[Indec]:
    return list(_rigid_indecs(n))
