from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from enpt.core import HostTree, LabeledGraph, build_enpt, build_ept
from enpt.errors import DegenerateTreeError, MalformedInputError
from enpt.generators import (
    Tour,
    is_planar_tour,
    make_tour,
    rep_of_clique,
    rep_of_cycle,
    rep_of_even_cycle,
    rep_of_odd_cycle,
    rep_of_tree,
    rep_of_w51,
    w51_graph,
)
from enpt.sampling import random_tree

DOUBLE_STAR = HostTree(6, frozenset({(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)}))


def test_tree_single_edge():
    r = rep_of_tree(LabeledGraph(2, frozenset({(0, 1)})))
    assert r.tree.vertex_count == 4 and r.tree.leaves() and len(r.tree.leaves()) == 2
    assert all(p.length == 2 for p in r.paths)
    assert build_enpt(r) == LabeledGraph.complete(2)


def test_tree_claw():
    claw = LabeledGraph(4, frozenset({(0, 1), (0, 2), (0, 3)}))
    assert build_enpt(rep_of_tree(claw)) == claw


def test_tree_rejects_non_tree():
    with pytest.raises(MalformedInputError):
        rep_of_tree(LabeledGraph.cycle(4))


@given(st.integers(1, 50), st.integers(0, 2**32 - 1))
def test_tree_roundtrip(n, seed):
    t = random_tree(n, random.Random(seed))
    assert build_enpt(rep_of_tree(t)) == t


@pytest.mark.parametrize("k", [3, 4, 7])
def test_star_tour_is_cycle(k):
    tour, r = make_tour(HostTree.star(k), list(range(k, 0, -1)))
    assert build_enpt(r) == LabeledGraph.cycle(2 * k)
    assert tour.long_paths == tuple(range(0, 2 * k, 2))
    assert all(r.paths[i].length == 1 for i in tour.short_paths)
    assert r.paths[0].ends == (k, k - 1)


def test_tour_needs_three_leaves():
    with pytest.raises(DegenerateTreeError):
        make_tour(HostTree.path(5), [0, 4])


def test_tour_rejects_non_leaf_order():
    with pytest.raises(MalformedInputError):
        make_tour(HostTree.star(3), [1, 2, 0])


def test_planar_tour_examples():
    assert is_planar_tour(make_tour(HostTree.star(5), [3, 1, 5, 2, 4])[0])
    assert not is_planar_tour(make_tour(DOUBLE_STAR, [2, 4, 3, 5])[0])
    assert is_planar_tour(make_tour(DOUBLE_STAR, [2, 3, 4, 5])[0])


def test_tour_shape_on_any_tree():
    tour, r = make_tour(DOUBLE_STAR, [2, 4, 3, 5])
    assert isinstance(tour, Tour)
    assert build_enpt(r) == LabeledGraph.cycle(8)


@pytest.mark.parametrize("n", range(3, 41))
def test_cycles(n):
    assert build_enpt(rep_of_cycle(n)) == LabeledGraph.cycle(n)


def test_cycle_ranges():
    with pytest.raises(MalformedInputError):
        rep_of_even_cycle(7)
    with pytest.raises(MalformedInputError):
        rep_of_odd_cycle(5)
    with pytest.raises(MalformedInputError):
        rep_of_cycle(2)


def test_odd_cycle_adds_no_chord_between_halves():
    r = rep_of_odd_cycle(7)
    ept = build_ept(r)
    # halves 0 and 1; their only other neighbours are 6 and 2
    assert not ept.has_edge(0, 2) and not ept.has_edge(1, 6)
    assert ept.has_edge(0, 1)


@pytest.mark.parametrize("m", range(1, 7))
def test_cliques(m):
    r = rep_of_clique(m)
    assert build_enpt(r) == build_ept(r) == LabeledGraph.complete(m)


def test_w51_fixture():
    r = rep_of_w51()
    assert build_enpt(r) == w51_graph()
    assert build_enpt(r).degree(5) == 5
    assert build_enpt(r.restricted(range(5))) == LabeledGraph.cycle(5)
