"""Brute-force enumeration of small representations.

This is ground truth for the characterization results, not a solver: it
enumerates host trees up to isomorphism and assigns a tree path to every
label by backtracking, pruning with the relation each pair of labels must
realize.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Optional, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .core import (
    HostTree,
    LabeledGraph,
    PairGC,
    Relation,
    Representation,
    TreePath,
    _relation_unchecked,
)
from .errors import ResourceLimitError
from .verifier import red_triangles

MAX_ENUM_TREE = 10
MAX_REP_TREE = 8
MAX_PAIR_N = 6

_REL_CODE = {Relation.PARALLEL: 0, Relation.NON_SPLITTING: 1, Relation.SPLITTING: 2}
PAR, NS, SPLIT = 1, 2, 4  # bitmasks over relation codes


def _ahu(adj: dict[int, list[int]], v: int, parent: int) -> str:
    return "(" + "".join(sorted(_ahu(adj, w, v) for w in adj[v] if w != parent)) + ")"


def canonical_tree(g: nx.Graph) -> HostTree:
    """Relabel a tree canonically: root at the center with the smallest AHU
    code and number vertices breadth-first, children ordered by code."""
    adj = {v: sorted(g.neighbors(v)) for v in g.nodes}
    if len(adj) == 1:
        return HostTree(1, frozenset())
    best = None
    for c in nx.center(g):
        code = _ahu(adj, c, -1)
        if best is None or code < best[0]:
            best = (code, c)
    root = best[1]
    order = [root]
    parent = {root: -1}
    i = 0
    while i < len(order):
        v = order[i]
        kids = [w for w in adj[v] if w != parent[v]]
        kids.sort(key=lambda w: _ahu(adj, w, v))
        for w in kids:
            parent[w] = v
            order.append(w)
        i += 1
    label = {v: k for k, v in enumerate(order)}
    return HostTree(len(order), frozenset((label[a], label[b]) for a, b in g.edges))


@lru_cache(maxsize=None)
def tree_code(t: HostTree) -> str:
    g = nx.Graph(list(t.edges))
    g.add_nodes_from(range(t.vertex_count))
    adj = {v: sorted(g.neighbors(v)) for v in g.nodes}
    return min(_ahu(adj, c, -1) for c in nx.center(g))


@lru_cache(maxsize=None)
def _trees_of_order(order: int) -> tuple[HostTree, ...]:
    trees = [canonical_tree(g) for g in nx.nonisomorphic_trees(order)]
    trees.sort(key=tree_code)
    return tuple(trees)


def enumerate_trees(max_vertices: int, min_vertices: int = 2) -> list[HostTree]:
    """All trees on ``min_vertices..max_vertices`` vertices, one per isomorphism class."""
    if max_vertices > MAX_ENUM_TREE:
        raise ResourceLimitError(f"tree enumeration is capped at {MAX_ENUM_TREE} vertices")
    out: list[HostTree] = []
    for order in range(max(min_vertices, 1), max_vertices + 1):
        out.extend(_trees_of_order(order))
    return out


@lru_cache(maxsize=None)
def tree_automorphisms(t: HostTree) -> tuple[tuple[int, ...], ...]:
    g = nx.Graph(list(t.edges))
    g.add_nodes_from(range(t.vertex_count))
    autos = [tuple(m[v] for v in range(t.vertex_count)) for m in GraphMatcher(g, g).isomorphisms_iter()]
    return tuple(sorted(autos))


def _path_key(vertices: Sequence[int]) -> tuple[int, ...]:
    v = tuple(vertices)
    return v if v[0] < v[-1] else v[::-1]


@lru_cache(maxsize=None)
def _canonical_map(t: HostTree) -> tuple[HostTree, tuple[int, ...]]:
    """Canonical form of ``t`` and a vertex map from ``t`` onto it."""
    if t.vertex_count == 1:
        return t, (0,)
    g = nx.Graph(list(t.edges))
    canon = canonical_tree(g)
    if canon.edges == t.edges:
        return t, tuple(range(t.vertex_count))
    iso = next(GraphMatcher(g, nx.Graph(list(canon.edges))).isomorphisms_iter())
    return canon, tuple(iso[v] for v in range(t.vertex_count))


def canonical_key(r: Representation) -> tuple:
    """A key equal for two representations iff a host-tree isomorphism maps
    each labelled path onto the path with the same label."""
    canon, iso = _canonical_map(r.tree)
    moved = [[iso[v] for v in p.vertices] for p in r.paths]
    best = None
    for sigma in tree_automorphisms(canon):
        key = tuple(_path_key([sigma[v] for v in p]) for p in moved)
        if best is None or key < best:
            best = key
    return (canon.vertex_count, tree_code(canon), best)


def canonicalize(r: Representation) -> Representation:
    """Representation on the canonical tree with the lexicographically least paths."""
    canon, _ = _canonical_map(r.tree)
    return Representation(canon, tuple(TreePath(k) for k in canonical_key(r)[2]))


@dataclass
class _TreeTables:
    tree: HostTree
    paths: list[TreePath]
    rel: list[list[int]]
    compat: list[dict[int, frozenset[int]]]
    orbit_reps: list[int]
    _claws: dict

    @classmethod
    def build(cls, t: HostTree) -> _TreeTables:
        paths = [TreePath(_path_key(p.vertices)) for p in t.all_paths()]
        m = len(paths)
        rel = [[_REL_CODE[_relation_unchecked(paths[a], paths[b])] for b in range(m)] for a in range(m)]
        compat = []
        for a in range(m):
            by_mask = {}
            for mask in range(1, 8):
                by_mask[mask] = frozenset(b for b in range(m) if (mask >> rel[a][b]) & 1)
            compat.append(by_mask)
        index = {p.vertices: i for i, p in enumerate(paths)}
        reps = []
        seen = set()
        for i, p in enumerate(paths):
            if i in seen:
                continue
            reps.append(i)
            for sigma in tree_automorphisms(t):
                seen.add(index[_path_key([sigma[v] for v in p.vertices])])
        return cls(t, paths, rel, compat, reps, {})

    def is_claw(self, a: int, b: int, c: int) -> bool:
        key = tuple(sorted((a, b, c)))
        if key not in self._claws:
            from .verifier import find_pie_center

            r = Representation(self.tree, tuple(self.paths[i] for i in key))
            self._claws[key] = find_pie_center(r, (0, 1, 2)) is not None
        return self._claws[key]


@lru_cache(maxsize=None)
def _tables(t: HostTree) -> _TreeTables:
    return _TreeTables.build(t)


def _connected_order(n: int, adj: Sequence[frozenset[int]]) -> list[int]:
    """Labels ordered so that, where possible, each is adjacent to an earlier one."""
    order: list[int] = []
    left = set(range(n))
    while left:
        start = max(sorted(left), key=lambda v: len(adj[v]))
        frontier = [start]
        while frontier:
            v = frontier.pop(0)
            if v not in left:
                continue
            left.discard(v)
            order.append(v)
            frontier.extend(sorted((adj[v] & left), key=lambda w: -len(adj[w])))
    return order


def _backtrack(
    tables: _TreeTables,
    n: int,
    allowed: list[list[int]],
    order: list[int],
    triangles: Sequence[tuple[int, int, int]] = (),
) -> Iterator[list[int]]:
    """Yield path-index assignments (indexed by label) meeting ``allowed``."""
    pos = {lab: k for k, lab in enumerate(order)}
    checks: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for tri in triangles:
        checks[max(pos[v] for v in tri)].append(tri)
    m = len(tables.paths)
    assign = [-1] * n

    def rec(depth: int, domains: list[frozenset[int]]) -> Iterator[list[int]]:
        if depth == n:
            yield list(assign)
            return
        lab = order[depth]
        cands = tables.orbit_reps if depth == 0 else sorted(domains[depth])
        for a in cands:
            if depth == 0 and a not in domains[0]:
                continue
            assign[lab] = a
            if any(not tables.is_claw(*(assign[v] for v in tri)) for tri in checks[depth]):
                continue
            new = list(domains)
            dead = False
            for d2 in range(depth + 1, n):
                new[d2] = domains[d2] & tables.compat[a][allowed[lab][order[d2]]]
                if not new[d2]:
                    dead = True
                    break
            if not dead:
                yield from rec(depth + 1, new)
        assign[lab] = -1

    yield from rec(0, [frozenset(range(m))] * n)


def _pair_constraints(p: PairGC) -> list[list[int]]:
    n = p.n
    allowed = [[7] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        if p.is_cycle_edge(i, j):
            mask = NS
        elif p.g.has_edge(i, j):
            mask = SPLIT
        else:
            mask = PAR
        allowed[i][j] = allowed[j][i] = mask
    return allowed


def _iter_pair_representations(
    p: PairGC, max_tree_vertices: int, require_p3: bool, min_tree_vertices: int = 2
) -> Iterator[Representation]:
    allowed = _pair_constraints(p)
    order = _connected_order(p.n, p.g.adjacency)
    tris = red_triangles(p) if require_p3 else ()
    for t in enumerate_trees(max_tree_vertices, min_tree_vertices):
        tables = _tables(t)
        for assign in _backtrack(tables, p.n, allowed, order, tris):
            yield Representation(t, tuple(tables.paths[a] for a in assign))


def _guard(n: int, max_tree_vertices: int, allow_large: bool) -> None:
    if max_tree_vertices > MAX_REP_TREE:
        raise ResourceLimitError(f"host trees are capped at {MAX_REP_TREE} vertices")
    if n > MAX_PAIR_N and not allow_large:
        raise ResourceLimitError(f"n={n} exceeds {MAX_PAIR_N}; pass allow_large=True to override")


def enumerate_representations_of_pair(
    p: PairGC,
    max_tree_vertices: int,
    require_p3: bool = False,
    allow_large: bool = False,
) -> list[Representation]:
    """Every representation of ``p`` on a host tree of at most
    ``max_tree_vertices`` vertices, one per label-respecting isomorphism class,
    in canonical order."""
    _guard(p.n, max_tree_vertices, allow_large)
    found: dict[tuple, Representation] = {}
    for r in _iter_pair_representations(p, max_tree_vertices, require_p3):
        key = canonical_key(r)
        if key not in found:
            found[key] = Representation(r.tree, tuple(TreePath(v) for v in key[2]))
    return [found[k] for k in sorted(found)]


def find_pair_representation(
    p: PairGC,
    max_tree_vertices: int,
    require_p3: bool = False,
    allow_large: bool = False,
) -> Optional[Representation]:
    """First representation found (smallest host trees first), or ``None``."""
    _guard(p.n, max_tree_vertices, allow_large)
    return next(_iter_pair_representations(p, max_tree_vertices, require_p3), None)


def search_enpt_representation(
    target: LabeledGraph, max_tree_vertices: int, allow_large: bool = False
) -> Optional[Representation]:
    """Some representation whose ENPT graph is ``target`` (EPT unconstrained)."""
    _guard(target.n, max_tree_vertices, allow_large)
    n = target.n
    allowed = [[7] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        mask = NS if target.has_edge(i, j) else PAR | SPLIT
        allowed[i][j] = allowed[j][i] = mask
    order = _connected_order(n, target.adjacency)
    for t in enumerate_trees(max_tree_vertices):
        tables = _tables(t)
        for assign in _backtrack(tables, n, allowed, order):
            return Representation(t, tuple(tables.paths[a] for a in assign))
    return None


def pair_automorphisms(p: PairGC) -> list[tuple[int, ...]]:
    """Rotations and reflections of the cycle that also preserve ``G``."""
    n = p.n
    out = []
    for s in range(n):
        for sign in (1, -1):
            sigma = tuple((sign * v + s) % n for v in range(n))
            if all(p.g.has_edge(sigma[a], sigma[b]) for a, b in p.g.edges):
                out.append(sigma)
    return sorted(set(out))


def relabel(r: Representation, sigma: Sequence[int]) -> Representation:
    """Move the path of label ``i`` to label ``sigma[i]``."""
    paths = [None] * r.n
    for i, pth in enumerate(r.paths):
        paths[sigma[i]] = pth
    return Representation(r.tree, tuple(paths))


def count_classes(
    reps: Sequence[Representation],
    symmetries: Sequence[Sequence[int]] = (),
) -> int:
    """Number of classes under label-respecting tree isomorphism, optionally
    also identifying representations related by the given label permutations."""
    keys = set()
    for r in reps:
        variants = [r] + [relabel(r, s) for s in symmetries]
        keys.add(min(canonical_key(v) for v in variants))
    return len(keys)


def minimal_members(reps: Sequence[Representation], is_minimal: Optional[Callable] = None) -> list[Representation]:
    if is_minimal is None:
        from .minimality import is_minimal
    return [r for r in reps if is_minimal(r)]
