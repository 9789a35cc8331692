"""Random instances: trees, representations, planar-tour pairs and fan subdivisions."""

from __future__ import annotations

import random
from typing import Optional

import networkx as nx

from .core import HostTree, LabeledGraph, PairGC, Representation, TreePath, build_ept, norm_edge
from .errors import InvariantViolation, MalformedInputError
from .generators import Tour, make_tour
from .verifier import check_p3, verify_representation


def random_tree(n: int, rng: random.Random) -> LabeledGraph:
    """Uniform labelled tree on ``n`` vertices (via a random Pruefer sequence)."""
    if n < 1:
        raise MalformedInputError("a tree needs at least one vertex")
    if n == 1:
        return LabeledGraph(1)
    if n == 2:
        return LabeledGraph(2, frozenset({(0, 1)}))
    t = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return LabeledGraph(n, frozenset(t.edges()))


def random_host_tree(n: int, rng: random.Random) -> HostTree:
    return HostTree.from_graph(random_tree(n, rng))


def random_path(t: HostTree, rng: random.Random) -> TreePath:
    u, v = rng.sample(range(t.vertex_count), 2)
    return t.path_between(u, v)


def random_representation(
    rng: random.Random, max_tree: int = 12, max_paths: int = 8, min_tree: int = 2
) -> Representation:
    t = random_host_tree(rng.randint(min_tree, max_tree), rng)
    k = rng.randint(1, max_paths)
    return Representation(t, tuple(random_path(t, rng) for _ in range(k)))


def random_branching_tree(leaves: int, rng: random.Random) -> HostTree:
    """Random tree with ``leaves`` leaves and no vertex of degree two.

    Grows from a claw: each step either hangs a new leaf on an inner vertex
    or turns a leaf into an inner vertex with two leaf children.
    """
    if leaves < 3:
        raise MalformedInputError("need at least 3 leaves")
    adj: dict[int, set[int]] = {0: {1, 2, 3}, 1: {0}, 2: {0}, 3: {0}}
    while sum(len(s) == 1 for s in adj.values()) < leaves:
        nxt = len(adj)
        if rng.random() < 0.5:
            v = rng.choice(sorted(x for x, s in adj.items() if len(s) > 1))
            adj[v].add(nxt)
            adj[nxt] = {v}
        else:
            v = rng.choice(sorted(x for x, s in adj.items() if len(s) == 1))
            adj[v] |= {nxt, nxt + 1}
            adj[nxt] = {v}
            adj[nxt + 1] = {v}
    edges = frozenset(norm_edge(a, b) for a, s in adj.items() for b in s)
    return HostTree(len(adj), edges)


def random_dfs_leaf_order(t: HostTree, rng: random.Random) -> tuple[int, ...]:
    root = rng.randrange(t.vertex_count)
    order: list[int] = []

    def visit(v: int, parent: int) -> None:
        children = [w for w in t.adjacency[v] if w != parent]
        if not children:
            order.append(v)
        rng.shuffle(children)
        for w in children:
            visit(w, v)

    visit(root, -1)
    if t.degree(root) == 1:
        order.insert(0, root)
    return tuple(order)


def random_planar_tour_pair(
    rng: random.Random, min_leaves: int = 3, max_leaves: int = 6
) -> tuple[PairGC, Representation, Tour]:
    """A pair realized by a planar tour of a random branching tree."""
    t = random_branching_tree(rng.randint(min_leaves, max_leaves), rng)
    tour, r = make_tour(t, random_dfs_leaf_order(t, rng))
    return PairGC(build_ept(r)), r, tour


def _insert_after(n: int, a: int) -> list[int]:
    """Old label -> new label once a vertex is inserted right after ``a``."""
    return [v if v <= a else v + 1 for v in range(n)]


def fan_subdivided_pair(p: PairGC, apex: int) -> PairGC:
    """Insert a new cycle vertex after ``apex``; the old cycle edge becomes a chord."""
    n = p.n
    m = _insert_after(n, apex)
    x = apex + 1
    edges = {norm_edge(m[a], m[b]) for a, b in p.g.edges}
    edges |= {norm_edge(m[apex], x), norm_edge(x, m[(apex + 1) % n])}
    return PairGC(LabeledGraph(n + 1, frozenset(edges)))


def _oriented(path: TreePath, end: int) -> TreePath:
    if path.vertices[-1] == end:
        return path
    if path.vertices[0] == end:
        return path.reversed()
    raise MalformedInputError(f"path {path.vertices} does not end at {end}")


def fan_subdivide(
    p: PairGC, r: Representation, apex: int
) -> tuple[PairGC, Representation]:
    """Subdivide the BBR face at ``apex`` into a BRR and a BBR triangle.

    ``r`` must realize ``p`` with a length-1 path at ``apex`` on a leaf edge
    ``v-d`` shared only by the two neighbouring long paths.  The leaf edge is
    replaced by ``d-s-v`` and ``v`` gets two new leaves ``y`` and ``z``.
    """
    n = p.n
    before, after = (apex - 1) % n, (apex + 1) % n
    short = r.paths[apex]
    if short.length != 1:
        raise MalformedInputError(f"path {apex} is not a single leaf edge")
    v, d = short.vertices
    if r.tree.degree(v) != 1:
        v, d = d, v
    if r.tree.degree(v) != 1:
        raise MalformedInputError(f"path {apex} does not end at a leaf")
    users = {i for i, q in enumerate(r.paths) if norm_edge(v, d) in q.edges}
    if users != {before, apex, after}:
        raise MalformedInputError(f"leaf edge {(v, d)} is used by {sorted(users)}")
    s = r.tree.vertex_count
    y, z = s + 1, s + 2
    edges = (r.tree.edges - {norm_edge(v, d)}) | {
        norm_edge(d, s),
        norm_edge(s, v),
        norm_edge(v, y),
        norm_edge(v, z),
    }
    tree = HostTree(s + 3, edges)
    into = _oriented(r.paths[before], v).vertices
    out_of = _oriented(r.paths[after], v).reversed().vertices
    m = _insert_after(n, apex)
    paths: list[Optional[TreePath]] = [None] * (n + 1)
    for i, q in enumerate(r.paths):
        paths[m[i]] = q
    paths[m[before]] = TreePath(into[:-1] + (s,))
    paths[m[after]] = TreePath((y, v, s) + out_of[1:])
    paths[m[apex]] = TreePath((d, s, v, z))
    paths[apex + 1] = TreePath((s, v))
    r2 = Representation(tree, tuple(paths))
    p2 = fan_subdivided_pair(p, apex)
    if not verify_representation(r2, p2).ok or not check_p3(r2, p2).ok:
        raise InvariantViolation("fan subdivision does not realize the subdivided pair")
    return p2, r2


__all__ = [
    "random_tree",
    "random_host_tree",
    "random_path",
    "random_representation",
    "random_branching_tree",
    "random_dfs_leaf_order",
    "random_planar_tour_pair",
    "fan_subdivided_pair",
    "fan_subdivide",
]
