from __future__ import annotations

import random

import pytest
from hypothesis import given

from enpt.core import HostTree, PairGC, Relation, Representation, TreePath, build_ept, contract_graph, relation
from enpt.errors import IllegalMinifyError, MalformedInputError, NotUnionableError
from enpt.generators import rep_of_clique, rep_of_even_cycle
from enpt.minimality import (
    ContractTreeEdge,
    RemoveTail,
    apply_minify,
    contract_representation,
    equivalent_reduction,
    is_equivalent,
    is_minimal,
    legal_minify_ops,
    minimize,
)
from enpt.oracle import enumerate_representations_of_pair
from enpt.solver import solve

from strategies import representations

P3 = HostTree.path(3)
TRIFORCE = PairGC.from_chords(6, [(0, 2), (2, 4), (4, 0)])


def test_remove_tail():
    r = Representation(P3, (TreePath((0, 1, 2)),))
    assert apply_minify(r, RemoveTail(0, "front")).paths[0].vertices == (1, 2)
    assert apply_minify(r, RemoveTail(0, "back")).paths[0].vertices == (0, 1)


def test_contract_non_sole_edge():
    r = Representation(P3, (TreePath((0, 1, 2)),))
    out = apply_minify(r, ContractTreeEdge((1, 2)))
    assert out.tree.vertex_count == 2 and out.paths[0].vertices == (0, 1)


def test_single_edge_tail_is_illegal():
    r = Representation(P3, (TreePath((0, 1)),))
    with pytest.raises(IllegalMinifyError):
        apply_minify(r, RemoveTail(0, "front"))
    with pytest.raises(IllegalMinifyError):
        apply_minify(r, ContractTreeEdge((0, 1)))


def test_bad_ops():
    r = Representation(P3, (TreePath((0, 1, 2)),))
    with pytest.raises(MalformedInputError):
        apply_minify(r, ContractTreeEdge((0, 2)))
    with pytest.raises(MalformedInputError):
        apply_minify(r, RemoveTail(3, "front"))


@given(representations())
def test_ops_never_grow(r):
    for op in legal_minify_ops(r):
        r2 = apply_minify(r, op)
        assert r2.tree.vertex_count <= r.tree.vertex_count
        assert all(b.length <= a.length for a, b in zip(r.paths, r2.paths))


def test_equivalence():
    r = rep_of_even_cycle(6)
    assert is_equivalent(r, r)
    assert not is_equivalent(rep_of_clique(3), rep_of_even_cycle(6).restricted(range(3)))
    assert not is_equivalent(rep_of_clique(3), rep_of_clique(4))


def test_k4_variants_equivalent():
    reps = enumerate_representations_of_pair(PairGC.from_chords(4, [(0, 2), (1, 3)]), 7)
    assert len(reps) > 1
    assert all(is_equivalent(reps[0], r) for r in reps[1:])


def test_solver_output_minimal():
    r = solve(TRIFORCE).representation
    assert is_minimal(r)


def test_subdivided_output_not_minimal():
    r = solve(TRIFORCE).representation
    # subdivide the leaf edge at path 1 with a new vertex
    (a, b) = r.paths[1].vertices
    s = r.tree.vertex_count
    tree = HostTree(s + 1, (r.tree.edges - {tuple(sorted((a, b)))}) | {(a, s), (b, s)})
    paths = []
    for p in r.paths:
        seq = []
        for x, y in zip(p.vertices, p.vertices[1:]):
            seq.append(x)
            if {x, y} == {a, b}:
                seq.append(s)
        seq.append(p.vertices[-1])
        paths.append(TreePath(tuple(seq)))
    big = Representation(tree, tuple(paths))
    assert is_equivalent(big, r)
    assert not is_minimal(big)
    assert minimize(big).tree.vertex_count == r.tree.vertex_count


def test_two_collinear_paths_sharing_one_edge():
    r = Representation(HostTree.path(2), (TreePath((0, 1)), TreePath((0, 1))))
    assert is_minimal(r)
    assert equivalent_reduction(r) is None


def test_contract_representation_cycle():
    r = rep_of_even_cycle(6)
    out = contract_representation(r, 0, 1)
    assert build_ept(out) == contract_graph(build_ept(r), 0, 1)


def test_contract_representation_clique():
    out = contract_representation(rep_of_clique(3), 0, 1)
    assert out.n == 2 and build_ept(out).sorted_edges() == [(0, 1)]


def test_contract_splitting_rejected():
    with pytest.raises(NotUnionableError):
        contract_representation(rep_of_even_cycle(6), 0, 2)


def test_random_contractions():
    from enpt.sampling import random_representation

    rng = random.Random(2)
    done = 0
    while done < 50:
        r = random_representation(rng, max_paths=8)
        pairs = [
            (i, j)
            for i in range(r.n)
            for j in range(i + 1, r.n)
            if relation(r.tree, r.paths[i], r.paths[j]) is Relation.NON_SPLITTING
        ]
        if pairs:
            contract_representation(r, *rng.choice(pairs))
            done += 1
