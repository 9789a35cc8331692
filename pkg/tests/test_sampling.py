from __future__ import annotations

import random

import pytest
from hypothesis import given

from enpt.core import PairGC
from enpt.errors import MalformedInputError
from enpt.generators import is_planar_tour
from enpt.pairs import contractible_edges, weak_dual_tree
from enpt.sampling import (
    fan_subdivide,
    fan_subdivided_pair,
    random_branching_tree,
    random_dfs_leaf_order,
    random_planar_tour_pair,
    random_tree,
)
from enpt.solver import solve

from strategies import seeds


@given(seeds)
def test_random_tree_is_tree(seed):
    rng = random.Random(seed)
    assert random_tree(rng.randint(1, 30), rng).is_tree()


@given(seeds)
def test_branching_tree(seed):
    rng = random.Random(seed)
    k = rng.randint(3, 8)
    t = random_branching_tree(k, rng)
    assert len(t.leaves()) == k
    assert all(t.degree(v) != 2 for v in range(t.vertex_count))


@given(seeds)
def test_dfs_order_is_planar(seed):
    rng = random.Random(seed)
    p, r, tour = random_planar_tour_pair(rng)
    assert sorted(tour.leaf_order) == sorted(tour.tree.leaves())
    assert is_planar_tour(tour)
    assert solve(p).yes


def test_fan_subdivided_pair():
    p = PairGC.from_chords(6, [(0, 2), (2, 4), (4, 0)])
    assert fan_subdivided_pair(p, 1) == PairGC.from_chords(7, [(0, 3), (3, 5), (5, 0), (1, 3)])


@given(seeds)
def test_fan_subdivide_realizes_pair(seed):
    rng = random.Random(seed)
    p, r, tour = random_planar_tour_pair(rng)
    apex = rng.choice(tour.short_paths)
    p2, r2 = fan_subdivide(p, r, apex)
    w = weak_dual_tree(p2)
    assert len(contractible_edges(p2)) == len(w.intermediates) == 1
    # the cycle edge entering the apex is the one left in no BBR triangle
    expected = (0, p.n) if apex == 0 else (apex - 1, apex)
    assert contractible_edges(p2) == {expected}


def test_fan_subdivide_needs_short_path():
    p, r, tour = random_planar_tour_pair(random.Random(0))
    with pytest.raises(MalformedInputError):
        fan_subdivide(p, r, tour.long_paths[0])


def test_dfs_order_covers_leaves():
    rng = random.Random(4)
    t = random_branching_tree(6, rng)
    assert sorted(random_dfs_leaf_order(t, rng)) == t.leaves()
