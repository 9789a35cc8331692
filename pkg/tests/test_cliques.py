from __future__ import annotations

import random

from hypothesis import given

from enpt.cliques import enumerate_maximal_cliques, enumerate_maximal_cliques_with_stats, max_clique
from enpt.core import LabeledGraph, build_enpt, path_union
from enpt.generators import rep_of_clique, rep_of_even_cycle, rep_of_tree
from enpt.verifier import is_clique

from naive import brute_max_clique, brute_maximal_cliques
from strategies import representations


def test_clique_rep():
    assert enumerate_maximal_cliques(rep_of_clique(4)) == [(0, 1, 2, 3)]
    assert len(max_clique(rep_of_clique(5))) == 5


def test_even_cycle():
    cliques = enumerate_maximal_cliques(rep_of_even_cycle(8))
    assert cliques == sorted(tuple(sorted((i, (i + 1) % 8))) for i in range(8))
    assert len(max_clique(rep_of_even_cycle(10))) == 2


def test_claw_tree():
    claw = LabeledGraph(4, frozenset({(0, 1), (0, 2), (0, 3)}))
    assert len(max_clique(rep_of_tree(claw))) == 2 == brute_max_clique(claw)


@given(representations(max_paths=8))
def test_maximal_cliques_match_brute_force(r):
    assert enumerate_maximal_cliques(r) == brute_maximal_cliques(build_enpt(r))


@given(representations(max_paths=10))
def test_cliques_are_collinear_and_bounded(r):
    stats = enumerate_maximal_cliques_with_stats(r)
    g = build_enpt(r)
    for c in stats.cliques:
        assert is_clique(g, c)
        u = r.paths[c[0]]
        for i in c[1:]:
            u = path_union(r.tree, u, r.paths[i])
    assert stats.candidates <= r.tree.vertex_count ** 3
    for s in stats.subcollections:
        route = r.tree.path_between(*s.leaves).edges
        assert s.edge in route
        assert all(s.edge in r.paths[i].edges and r.paths[i].edges <= route for i in s.members)


def test_deterministic():
    rng = random.Random(3)
    from enpt.sampling import random_representation

    r = random_representation(rng, max_paths=9)
    assert enumerate_maximal_cliques(r) == enumerate_maximal_cliques(r)
