"""Independent reference computations used only by the tests.

None of these share code paths with the library beyond the Indec type.
"""

from __future__ import annotations

from itertools import product

from clustertube.tube import Indec


def hom_dim_gf2(n: int, x: Indec, y: Indec) -> int:
    """dim Hom(x, y) by counting every vertex-respecting intertwiner over GF(2)."""
    a, b, c, d = x.socle, x.length, y.socle, y.length
    free = [(j, i) for j in range(d) for i in range(b) if (a + i - c - j) % n == 0]
    count = 0
    for bits in product((0, 1), repeat=len(free)):
        F = [[0] * b for _ in range(d)]
        for (j, i), v in zip(free, bits):
            F[j][i] = v
        # x acts as the down-shift on both modules
        ok = all(
            (F[j][i - 1] if i >= 1 else 0) == (F[j + 1][i] if j + 1 < d else 0)
            for i in range(b)
            for j in range(d)
        )
        count += ok
    dim = count.bit_length() - 1
    assert 1 << dim == count
    return dim


def hom_closed(n: int, x: Indec, y: Indec) -> int:
    top = x.socle + x.length
    return sum(1 for l in range(1, min(x.length, y.length) + 1) if (top - l - y.socle) % n == 0)


def hom_cluster_closed(n: int, m: Indec, k: Indec) -> int:
    def sh(z, s):
        return Indec((z.socle - s - 1) % n + 1, z.length)

    # Hom_T(m, k) + Ext^1_T(m, tau^-1 k), Ext^1(u, v) = Hom(v, tau u)
    return hom_closed(n, m, k) + hom_closed(n, sh(k, -1), sh(m, 1))


def brute_force_maximal_rigid(n: int) -> set[frozenset]:
    """All rigid sets of size n-1 among all rigid indecomposables, by plain
    backtracking with pairwise pruning; each is also checked to be maximal."""
    rig = [Indec(a, b) for a in range(1, n + 1) for b in range(1, n)]

    def sigma(z):
        return Indec((z.socle - 2) % n + 1, z.length)

    def ok(u, v):
        return hom_cluster_closed(n, u, sigma(v)) == 0 and hom_cluster_closed(n, v, sigma(u)) == 0

    found = set()

    def go(chosen, start):
        if len(chosen) == n - 1:
            found.add(frozenset(chosen))
            return
        for k in range(start, len(rig)):
            if all(ok(rig[k], y) for y in chosen):
                go(chosen + [rig[k]], k + 1)

    go([], 0)
    for S in found:
        assert not any(x not in S and all(ok(x, y) for y in S) for x in rig)
    return found


def catalan(m: int) -> int:
    from math import comb

    return comb(2 * m, m) // (m + 1)


def cartan_bruteforce(vertices, arrows, loop_vertex, cycles, max_len):
    """Cartan matrix by enumerating every arrow word up to max_len and discarding
    those that are not composable or contain a relation."""
    idx = {v: k for k, v in enumerate(vertices)}
    arrows = list(arrows)
    bad = {((loop_vertex, loop_vertex), (loop_vertex, loop_vertex))}
    for u, v, w in cycles:
        for p, q, r in ((u, v, w), (v, w, u), (w, u, v)):
            bad.add(((p, q), (q, r)))
    m = [[0] * len(vertices) for _ in vertices]
    for v in vertices:
        m[idx[v]][idx[v]] += 1
    for L in range(1, max_len + 1):
        for word in product(arrows, repeat=L):
            if any(word[k][1] != word[k + 1][0] for k in range(L - 1)):
                continue
            if any((word[k], word[k + 1]) in bad for k in range(L - 1)):
                continue
            m[idx[word[0][0]]][idx[word[-1][1]]] += 1
    return m


def euler_form(n: int, x: Indec, y: Indec) -> int:
    """<dim x, dim y> for the cyclic quiver with arrows i -> i-1.

    The tube is hereditary, so this equals dim Hom(x, y) - dim Ext^1(x, y).
    """
    dx, dy = [0] * n, [0] * n
    for j in range(x.length):
        dx[(x.socle + j) % n] += 1
    for j in range(y.length):
        dy[(y.socle + j) % n] += 1
    return sum(dx[i] * dy[i] for i in range(n)) - sum(dx[i] * dy[(i - 1) % n] for i in range(n))
