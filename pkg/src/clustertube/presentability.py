"""Objects finitely presented by a maximal rigid object.

``F`` is the set of ``(a, b)`` with ``b <= n-1``, or ``n <= b <= 2(n-1)`` and
``a + b <= 2n - 1``.  An indecomposable lies in ``pr(T)`` iff it lies in
``Sigma^{-(a-1)} F`` where ``a`` is the apex of ``T``.
"""

from __future__ import annotations

from .errors import InvariantViolation, PreconditionError
from .rigid import MaximalRigid, apex_of, standard_object
from .tube import Indec, all_indecs, check_rank, indec, object_sum, shift


def in_F(n: int, x: Indec) -> bool:
    a, b = x.socle, x.length
    return b <= n - 1 or (n <= b <= 2 * (n - 1) and a + b <= 2 * n - 1)


def in_pr_apex(n: int, apex: int, x: Indec) -> bool:
    if x.length > 2 * (n - 1):
        return False
    return in_F(n, shift(n, x, apex - 1))


def in_pr(T: MaximalRigid, x: Indec) -> bool:
    return in_pr_apex(T.n, apex_of(T), x)


def f_region(n: int) -> list[Indec]:
    return [x for x in all_indecs(n, 2 * (n - 1)) if in_F(n, x)]


def approximation_cone(n: int, x: Indec) -> tuple:
    """Cone of the right ``add T``-approximation of ``x`` for ``T = (1,1)+...+(1,n-1)``.

    Only defined for ``n <= length <= 2(n-1)``; length-zero terms are the
    zero object and are dropped.
    """
    a, b = x.socle, x.length
    if not n <= b <= 2 * (n - 1):
        raise PreconditionError(f"cone formula needs n <= length <= 2(n-1), got {x!r}")
    if a == n and a + b == 2 * n - 1:
        raise InvariantViolation("a = n and a + b = 2n - 1 cannot both hold when b >= n")
    if a == n:
        lengths = [2 * n - 1, b - n]
    elif a + b == 2 * n - 1:
        lengths = [a - 1, n - 1]
    else:
        q = (a + b) // n
        lengths = [a - 1, n * q - 1, a + b - n * q]
    return object_sum(indec(n, 1, l) for l in lengths if l > 0)


def module_count(n: int) -> int:
    check_rank(n)
    return (3 * n * n - 5 * n + 2) // 2


def module_count_enumerated(n: int, apex: int = 1) -> int:
    """``|Sigma^{-(a-1)} F| - (n - 1)``: presented indecomposables modulo ``add Sigma T``."""
    T = standard_object(n, apex)
    presented = [x for x in all_indecs(n, 2 * (n - 1)) if in_pr(T, x)]
    sigma_T = {shift(n, y, 1) for y in T.summands}
    if not sigma_T <= set(presented):
        raise InvariantViolation("Sigma T is not finitely presented by T")
    return len(presented) - len(sigma_T)


def region_grid(n: int, apex: int = 1, filled: str = "*", hollow: str = "o") -> list[str]:
    """ASCII picture of ``Sigma^{-(apex-1)} F`` laid out like the AR quiver.

    Rows run from length ``2n - 1`` (top) down to 1; ``(a, b)`` sits at
    column ``2(a-1) + (b-1)`` mod ``2n`` and column ``2n`` repeats column 0.
    """
    width = 2 * n + 1
    rows = []
    for b in range(2 * n - 1, 0, -1):
        cells = [" "] * width
        for a in range(1, n + 1):
            col = (2 * (a - 1) + (b - 1)) % (2 * n)
            mark = filled if in_pr_apex(n, apex, indec(n, a, b)) else hollow
            cells[col] = mark
            if col == 0:
                cells[2 * n] = mark
        rows.append(" ".join(cells).rstrip())
    return rows
