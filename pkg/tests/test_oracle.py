from __future__ import annotations

import pytest

from enpt.core import HostTree, LabeledGraph, PairGC, Representation, TreePath, build_enpt, build_ept
from enpt.errors import ResourceLimitError
from enpt.generators import fixture, rep_of_clique, w51_graph
from enpt.oracle import (
    canonical_key,
    canonicalize,
    count_classes,
    enumerate_representations_of_pair,
    enumerate_trees,
    find_pair_representation,
    minimal_members,
    pair_automorphisms,
    relabel,
    search_enpt_representation,
)
from enpt.solver import solve

K4 = PairGC.from_chords(4, [(0, 2), (1, 3)])
DIAMOND = PairGC.from_chords(4, [(1, 3)])


class TestTrees:
    @pytest.mark.parametrize(
        "limit,count", [(2, 1), (3, 2), (4, 4), (5, 7), (6, 13), (7, 24), (8, 47), (9, 94), (10, 200)]
    )
    def test_counts(self, limit, count):
        trees = enumerate_trees(limit)
        assert len(trees) == count
        assert all(2 <= t.vertex_count <= limit for t in trees)

    def test_guard(self):
        with pytest.raises(ResourceLimitError):
            enumerate_trees(11)

    def test_deterministic(self):
        assert enumerate_trees(7) == enumerate_trees(7)


class TestCanonical:
    def test_relabelled_tree_same_key(self):
        a = Representation(HostTree.star(3), (TreePath((1, 0, 2)), TreePath((0, 3))))
        t = HostTree(4, frozenset({(2, 0), (2, 1), (2, 3)}))
        b = Representation(t, (TreePath((3, 2, 0)), TreePath((2, 1))))
        assert canonical_key(a) == canonical_key(b)
        assert canonicalize(a) == canonicalize(b)

    def test_label_swap_distinguished(self):
        t = HostTree.path(4)
        a = Representation(t, (TreePath((0, 1)), TreePath((0, 1, 2, 3))))
        b = Representation(t, (TreePath((1, 2)), TreePath((0, 1, 2, 3))))
        assert canonical_key(a) != canonical_key(b)
        assert canonical_key(a) == canonical_key(Representation(t, (TreePath((3, 2)), TreePath((0, 1, 2, 3)))))


class TestEnumeration:
    def test_c4_has_none(self):
        assert enumerate_representations_of_pair(PairGC.from_chords(4), 7) == []

    def test_k4_unique_minimal(self):
        reps = enumerate_representations_of_pair(K4, 7)
        assert reps and len(minimal_members(reps)) == 1

    def test_diamond_minimal_up_to_pair_symmetry(self):
        reps = enumerate_representations_of_pair(DIAMOND, 7)
        mins = minimal_members(reps)
        assert len(mins) == 2
        assert count_classes(mins, pair_automorphisms(DIAMOND)) == 1

    def test_all_members_realize_pair(self):
        for r in enumerate_representations_of_pair(DIAMOND, 6):
            assert build_ept(r) == DIAMOND.g and build_enpt(r) == DIAMOND.cycle

    def test_sorted_and_deduplicated(self):
        reps = enumerate_representations_of_pair(K4, 7)
        keys = [canonical_key(r) for r in reps]
        assert keys == sorted(set(keys))

    def test_solver_outputs_are_enumerated(self):
        p = PairGC.from_chords(6, [(0, 2), (2, 4), (4, 0)])
        keys = {canonical_key(r) for r in enumerate_representations_of_pair(p, 6, require_p3=True)}
        assert canonical_key(solve(p).representation) in keys

    def test_guards(self):
        with pytest.raises(ResourceLimitError):
            enumerate_representations_of_pair(K4, 9)
        with pytest.raises(ResourceLimitError):
            find_pair_representation(PairGC.from_chords(7), 5)


class TestSearch:
    def test_triangle(self):
        r = search_enpt_representation(LabeledGraph.complete(3), 4)
        assert build_enpt(r) == LabeledGraph.complete(3)

    @pytest.mark.parametrize("name,target", [("cycle4", LabeledGraph.cycle(4)), ("cycle5", LabeledGraph.cycle(5))])
    def test_cycle_fixtures_rederived(self, name, target):
        assert search_enpt_representation(target, 8) == fixture(name)

    def test_w51_rederived(self):
        assert search_enpt_representation(w51_graph(), 8) == fixture("w51")

    def test_none_within_bounds(self):
        assert search_enpt_representation(LabeledGraph.cycle(5), 5) is None


def test_relabel():
    r = rep_of_clique(3)
    moved = relabel(r, (2, 0, 1))
    assert moved.paths[2] == r.paths[0] and moved.paths[0] == r.paths[1]


def test_pair_automorphisms():
    assert len(pair_automorphisms(K4)) == 8
    assert pair_automorphisms(DIAMOND) == [(0, 1, 2, 3), (0, 3, 2, 1), (2, 1, 0, 3), (2, 3, 0, 1)]
