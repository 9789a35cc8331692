"""Constructive ENPT representations of basic graph families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .core import HostTree, LabeledGraph, Representation, TreePath
from .errors import DegenerateTreeError, MalformedInputError


@dataclass(frozen=True)
class Tour:
    """Leaf-to-leaf long paths in cyclic leaf order, plus one leaf edge per leaf.

    ``long_paths[i]`` is the label of the path from ``leaf_order[i]`` to
    ``leaf_order[i+1]``; ``short_paths[i]`` is the label of the length-1 path
    at ``leaf_order[i]``.
    """

    tree: HostTree
    leaf_order: tuple[int, ...]
    long_paths: tuple[int, ...]
    short_paths: tuple[int, ...]


def _load_fixture(name: str) -> Representation:
    from .io import parse_representation

    text = resources.files("enpt").joinpath("fixtures").joinpath(f"{name}.rep").read_text()
    return parse_representation(text)


@lru_cache(maxsize=None)
def fixture(name: str) -> Representation:
    return _load_fixture(name)


def rep_of_tree(t: LabeledGraph) -> Representation:
    """Represent a tree: root it at 0, hang it under two new vertices and let
    each vertex's path run up to its ancestor at distance two."""
    if not t.is_tree():
        raise MalformedInputError("input graph is not a tree")
    n = t.n
    up, top = n, n + 1
    parent = [-1] * (n + 2)
    parent[0] = up
    parent[up] = top
    stack = [0]
    seen = {0}
    while stack:
        v = stack.pop()
        for w in t.adjacency[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    host = HostTree(n + 2, t.edges | {(0, up), (up, top)})
    paths = tuple(TreePath((v, parent[v], parent[parent[v]])) for v in range(n))
    return Representation(host, paths)


def make_tour(t: HostTree, pi: Sequence[int]) -> tuple[Tour, Representation]:
    """Tour of ``t`` in leaf order ``pi``.

    Label ``2i`` is the long path ``pi[i] -> pi[i+1]`` and label ``2i+1`` the
    short path at ``pi[i+1]``, so the ENPT graph is the cycle ``0, 1, ..., 2k-1``.
    """
    leaves = t.leaves()
    k = len(leaves)
    if k < 3:
        raise DegenerateTreeError(f"a tour needs at least 3 leaves, tree has {k}")
    pi = tuple(int(v) for v in pi)
    if sorted(pi) != sorted(leaves):
        raise MalformedInputError(f"{pi} is not an ordering of the leaves {sorted(leaves)}")
    paths: list[TreePath] = []
    for i in range(k):
        a, b = pi[i], pi[(i + 1) % k]
        paths.append(t.path_between(a, b))
        paths.append(TreePath((b, t.adjacency[b][0])))
    tour = Tour(
        tree=t,
        leaf_order=pi,
        long_paths=tuple(range(0, 2 * k, 2)),
        short_paths=tuple((2 * i - 1) % (2 * k) for i in range(k)),
    )
    return tour, Representation(t, tuple(paths))


def is_planar_tour(tour: Tour) -> bool:
    """Whether some DFS of the tree meets the leaves in the cyclic order of the tour.

    Equivalently: removing any tree edge splits the leaves into two sets that
    are both contiguous arcs of the cyclic order.
    """
    t = tour.tree
    pi = tour.leaf_order
    k = len(pi)
    for a, b in sorted(t.edges):
        side = _component_without(t, a, b)
        marks = [pi[i] in side for i in range(k)]
        changes = sum(marks[i] != marks[(i + 1) % k] for i in range(k))
        if changes > 2:
            return False
    return True


def _component_without(t: HostTree, a: int, b: int) -> set[int]:
    """Vertices on ``a``'s side once edge ``{a, b}`` is removed."""
    seen = {a}
    stack = [a]
    while stack:
        v = stack.pop()
        for w in t.adjacency[v]:
            if w not in seen and not (v == a and w == b):
                seen.add(w)
                stack.append(w)
    return seen


def rep_of_even_cycle(n: int) -> Representation:
    if n % 2 or n < 6:
        raise MalformedInputError(f"even cycle construction needs even n >= 6, got {n}")
    k = n // 2
    star = HostTree.star(k)
    return make_tour(star, range(1, k + 1))[1]


def rep_of_odd_cycle(n: int) -> Representation:
    """Tour of a star with ``(n-1)/2`` leaves whose first long path is split in two.

    Both edges of that long path are subdivided; the two halves overlap on
    the two inner edges, so neither half lies inside a neighbouring long path.
    """
    if n % 2 == 0 or n < 7:
        raise MalformedInputError(f"odd cycle construction needs odd n >= 7, got {n}")
    k = (n - 1) // 2
    center = 0
    # leaves 1..k around the center; 1 and 2 get subdivision vertices t and s
    t_, s_ = k + 1, k + 2
    edges = {(center, i) for i in range(3, k + 1)}
    edges |= {(1, t_), (t_, center), (center, s_), (s_, 2)}
    host = HostTree(k + 3, frozenset(edges))
    order = list(range(1, k + 1))
    _, tour_rep = make_tour(host, order)
    first, second = TreePath((1, t_, center, s_)), TreePath((t_, center, s_, 2))
    paths = [first, second] + list(tour_rep.paths[1:])
    return Representation(host, tuple(paths))


def rep_of_cycle(n: int) -> Representation:
    """Representation whose ENPT graph is the cycle ``0, 1, ..., n-1``."""
    if n == 3:
        return rep_of_clique(3)
    if n == 4:
        return fixture("cycle4")
    if n == 5:
        return fixture("cycle5")
    if n >= 6:
        return rep_of_even_cycle(n) if n % 2 == 0 else rep_of_odd_cycle(n)
    raise MalformedInputError(f"no cycle on {n} vertices")


def rep_of_clique(m: int) -> Representation:
    """``m`` staggered paths of length ``m`` on a host path; all share the
    edge in the middle and are pairwise collinear."""
    if m < 1:
        raise MalformedInputError(f"clique size must be >= 1, got {m}")
    host = HostTree.path(2 * m)
    return Representation(host, tuple(TreePath(tuple(range(i, i + m + 1))) for i in range(m)))


def rep_of_w51() -> Representation:
    """Wheel with rim ``0..4`` and hub ``5``; a graph with no EPT representation."""
    return fixture("w51")


def w51_graph() -> LabeledGraph:
    return LabeledGraph(6, LabeledGraph.cycle(5).edges | {(i, 5) for i in range(5)})
