import random

import pytest

from clustertube.errors import PreconditionError
from clustertube.presentability import (
    approximation_cone,
    f_region,
    in_F,
    in_pr,
    in_pr_apex,
    module_count,
    module_count_enumerated,
    region_grid,
)
from clustertube.rigid import enumerate_maximal_rigid, make_rigid, standard_object
from clustertube.tube import Indec, all_indecs, loewy_length, rigid_indecs, shift

I = Indec

# black/white picture of F for n = 4, top row is length 7
REFERENCE_GRID_N4 = """\
o   o   o   o   o
  o   o   *   o
o   o   *   *   o
  o   *   *   *
*   *   *   *   *
  *   *   *   *
*   *   *   *   *"""


def test_in_F_examples():
    assert in_F(4, I(2, 5))
    assert not in_F(4, I(3, 5))
    assert in_F(4, I(3, 3))
    assert not in_F(4, I(1, 7))


def test_in_pr_examples():
    T = standard_object(4)
    assert in_pr(T, I(2, 5))
    assert not in_pr(T, I(4, 4))
    assert in_pr(T, I(1, 4))
    assert not in_pr(T, I(2, 7))


def test_cone_examples():
    assert approximation_cone(4, I(4, 4)) == (I(1, 7),)
    assert sorted(approximation_cone(4, I(2, 5))) == [I(1, 1), I(1, 3)]
    assert sorted(approximation_cone(4, I(1, 4))) == [I(1, 1), I(1, 3)]
    with pytest.raises(PreconditionError):
        approximation_cone(4, I(1, 3))
    with pytest.raises(PreconditionError):
        approximation_cone(4, I(1, 7))


def _cone_grid(n):
    return [x for x in all_indecs(n, 2 * (n - 1)) if x.length >= n]


@pytest.mark.parametrize("n", range(2, 11))
def test_cone_consistency(n):
    T = standard_object(n)
    for x in _cone_grid(n):
        cone = approximation_cone(n, x)
        assert in_pr(T, x) == all(y.length <= n - 1 for y in cone)
        assert loewy_length(cone) <= (n - 1) + x.length


@pytest.mark.parametrize("n", range(2, 11))
def test_region_and_module_counts(n):
    assert len(f_region(n)) == 3 * n * (n - 1) // 2
    assert module_count(n) == (3 * n * n - 5 * n + 2) // 2
    for a in range(1, n + 1):
        assert module_count_enumerated(n, a) == module_count(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_pr_depends_only_on_the_wing(n):
    # all objects in one wing present the same indecomposables
    by_apex = {}
    grid = all_indecs(n, 2 * n)
    for T in enumerate_maximal_rigid(n):
        sig = frozenset(x for x in grid if in_pr(T, x))
        assert by_apex.setdefault(T.apex, sig) == sig
        # rigid objects and Sigma T are always presented
        assert all(in_pr(T, x) for x in rigid_indecs(n))
        assert all(in_pr(T, shift(n, y, 1)) for y in T)


@pytest.mark.parametrize("n", range(2, 7))
def test_pr_is_shift_equivariant(n):
    for a in range(1, n + 1):
        for x in all_indecs(n, 2 * n):
            if x.length <= 2 * (n - 1):
                assert in_pr_apex(n, a, x) == in_F(n, shift(n, x, a - 1))
            assert in_pr_apex(n, a, x) == in_pr_apex(n, a % n + 1, shift(n, x, -1))


def test_grid_matches_reference_picture():
    assert "\n".join(region_grid(4)) == REFERENCE_GRID_N4
    # rows of length 1 and 3 repeat their filled first mark in the last column
    assert sum(row.count("*") for row in region_grid(4)) - 2 == 18


def test_grid_other_apex_has_same_count():
    for a in range(1, 5):
        rows = region_grid(4, a)
        # column 2n repeats column 0, so subtract the duplicated marks
        dup = sum(1 for r in rows if len(r) == 4 * 4 + 1 and r[-1] == "*")
        assert sum(r.count("*") for r in rows) - dup == 18


def test_random_objects_presented_by_rigid_sums():
    rng = random.Random(3)
    objs = {n: enumerate_maximal_rigid(n) for n in (6, 7, 8)}
    for _ in range(50):
        n = rng.randint(6, 8)
        T = rng.choice(objs[n])
        x = rng.choice(rigid_indecs(n))
        assert in_pr(T, x)


def test_nonstandard_object_uses_its_apex():
    T = make_rigid(4, [(1, 3), (1, 1), (3, 1)])
    assert in_pr(T, I(2, 5)) and not in_pr(T, I(4, 4))
