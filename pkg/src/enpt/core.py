"""Trees, paths, representations and their VPT / EPT / ENPT graphs.

A representation ``<T, P>`` is a host tree ``T`` together with a family of
non-trivial simple paths indexed ``0..n-1``.  Two paths are *parallel* when
they share no edge; when they share an edge they are *non-splitting* if their
union has no vertex of degree three or more and *splitting* otherwise.
"""

from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CycleUnionError, MalformedInputError, NotUnionableError

Edge = tuple[int, int]


def norm_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def _normalize_edges(edges: Iterable[Sequence[int]]) -> frozenset[Edge]:
    out = set()
    for e in edges:
        a, b = e
        out.add(norm_edge(int(a), int(b)))
    return frozenset(out)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on the vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        edges = _normalize_edges(self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise MalformedInputError(f"negative vertex count {self.n}")
        for a, b in edges:
            if a == b:
                raise MalformedInputError(f"self-loop at {a}")
            if a < 0 or b >= self.n:
                raise MalformedInputError(f"edge {(a, b)} out of range for n={self.n}")

    @classmethod
    def cycle(cls, n: int) -> LabeledGraph:
        if n < 3:
            raise MalformedInputError(f"cycle needs n >= 3, got {n}")
        return cls(n, frozenset(norm_edge(i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> LabeledGraph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    def has_edge(self, a: int, b: int) -> bool:
        return norm_edge(a, b) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_tree(self) -> bool:
        if self.n == 0 or len(self.edges) != self.n - 1:
            return False
        return len(_reachable(self.adjacency, 0)) == self.n

    def induced(self, vertices: Iterable[int]) -> LabeledGraph:
        """Induced subgraph, relabelled densely by increasing old label."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        sub = [(index[a], index[b]) for a, b in self.edges if a in index and b in index]
        return LabeledGraph(len(keep), frozenset(sub))


def _reachable(adj: Sequence[Iterable[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


@dataclass(frozen=True)
class TreePath:
    """A simple path given by its vertex sequence (at least one edge)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        verts = tuple(int(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise MalformedInputError(f"path {verts} is trivial")
        if len(set(verts)) != len(verts):
            raise MalformedInputError(f"path {verts} repeats a vertex")

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(self.edge_list)

    @property
    def edge_list(self) -> list[Edge]:
        v = self.vertices
        return [norm_edge(v[i], v[i + 1]) for i in range(len(v) - 1)]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def reversed(self) -> TreePath:
        return TreePath(self.vertices[::-1])

    def normalized(self) -> TreePath:
        """Orientation with the smaller endpoint first."""
        if self.vertices[0] > self.vertices[-1]:
            return self.reversed()
        return self

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class HostTree:
    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        edges = _normalize_edges(self.edges)
        object.__setattr__(self, "edges", edges)
        n = self.vertex_count
        if n < 1:
            raise MalformedInputError("host tree needs at least one vertex")
        for a, b in edges:
            if a == b or a < 0 or b >= n:
                raise MalformedInputError(f"bad tree edge {(a, b)} for {n} vertices")
        if len(edges) != n - 1 or len(_reachable(self.adjacency, 0)) != n:
            raise MalformedInputError("host tree edges do not form a spanning tree")

    @classmethod
    def from_graph(cls, g: LabeledGraph) -> HostTree:
        return cls(g.n, g.edges)

    @classmethod
    def path(cls, n: int) -> HostTree:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> HostTree:
        """Star whose center is vertex 0 and whose leaves are 1..leaves."""
        return cls(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(s)) for s in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in range(self.vertex_count) if self.degree(v) == 1]

    def has_edge(self, a: int, b: int) -> bool:
        return norm_edge(a, b) in self.edges

    def as_graph(self) -> LabeledGraph:
        return LabeledGraph(self.vertex_count, self.edges)

    @cached_property
    def _parents(self) -> dict[int, list[int]]:
        return {}

    def _parent_from(self, root: int) -> list[int]:
        cache = self._parents
        if root not in cache:
            parent = [-1] * self.vertex_count
            parent[root] = root
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in self.adjacency[v]:
                    if parent[w] == -1:
                        parent[w] = v
                        queue.append(w)
            cache[root] = parent
        return cache[root]

    def path_between(self, u: int, v: int) -> TreePath:
        """The unique ``u``-``v`` path, listed from ``u``."""
        if u == v:
            raise MalformedInputError("a path between a vertex and itself is trivial")
        parent = self._parent_from(v)
        seq = [u]
        while seq[-1] != v:
            seq.append(parent[seq[-1]])
        return TreePath(tuple(seq))

    def validate_path(self, p: TreePath) -> None:
        for a, b in p.edge_list:
            if (a, b) not in self.edges:
                raise MalformedInputError(f"path {p.vertices} uses non-edge {(a, b)}")
        if max(p.vertices) >= self.vertex_count or min(p.vertices) < 0:
            raise MalformedInputError(f"path {p.vertices} leaves the tree")

    def all_paths(self) -> list[TreePath]:
        """Every non-trivial path, smaller endpoint first, sorted by endpoints."""
        return [
            self.path_between(u, v)
            for u, v in combinations(range(self.vertex_count), 2)
        ]


@dataclass(frozen=True)
class Representation:
    tree: HostTree
    paths: tuple[TreePath, ...]

    def __post_init__(self) -> None:
        paths = tuple(p if isinstance(p, TreePath) else TreePath(tuple(p)) for p in self.paths)
        object.__setattr__(self, "paths", paths)
        if not paths:
            raise MalformedInputError("a representation needs at least one path")
        for p in paths:
            self.tree.validate_path(p)

    @property
    def n(self) -> int:
        return len(self.paths)

    def restricted(self, labels: Iterable[int]) -> Representation:
        """Sub-representation on the given labels, relabelled densely."""
        keep = sorted(set(labels))
        return Representation(self.tree, tuple(self.paths[i] for i in keep))


def _as_path(p: TreePath | Sequence[int]) -> TreePath:
    return p if isinstance(p, TreePath) else TreePath(tuple(p))


@dataclass(frozen=True)
class PairGC:
    """A graph ``g`` whose Hamiltonian cycle is ``0, 1, ..., n-1``.

    Cycle edges are the blue (ENPT) edges; every other edge is a red chord.
    """

    g: LabeledGraph

    def __post_init__(self) -> None:
        n = self.g.n
        if n < 3:
            raise MalformedInputError(f"pair needs n >= 3, got {n}")
        for i in range(n):
            if not self.g.has_edge(i, (i + 1) % n):
                raise MalformedInputError(f"cycle edge {(i, (i + 1) % n)} missing from G")

    @classmethod
    def from_chords(cls, n: int, chords: Iterable[Sequence[int]] = ()) -> PairGC:
        chords = _normalize_edges(chords)
        for a, b in chords:
            if (b - a) % n in (1, n - 1):
                raise MalformedInputError(f"chord {(a, b)} duplicates a cycle edge")
        cyc = LabeledGraph.cycle(n).edges
        return cls(LabeledGraph(n, cyc | chords))

    @property
    def n(self) -> int:
        return self.g.n

    def is_cycle_edge(self, a: int, b: int) -> bool:
        return (b - a) % self.n in (1, self.n - 1)

    @cached_property
    def cycle(self) -> LabeledGraph:
        return LabeledGraph.cycle(self.n)

    @cached_property
    def chords(self) -> frozenset[Edge]:
        return frozenset(e for e in self.g.edges if not self.is_cycle_edge(*e))

    def cycle_edges(self) -> list[Edge]:
        n = self.n
        return sorted(norm_edge(i, (i + 1) % n) for i in range(n))


class Relation(enum.Enum):
    PARALLEL = "parallel"
    NON_SPLITTING = "non-splitting"
    SPLITTING = "splitting"


def split_vertices(t: HostTree, p: TreePath, q: TreePath) -> frozenset[int]:
    """Vertices of degree at least three in the union of ``p`` and ``q``."""
    p, q = _as_path(p), _as_path(q)
    t.validate_path(p)
    t.validate_path(q)
    deg: Counter[int] = Counter()
    for a, b in p.edges | q.edges:
        deg[a] += 1
        deg[b] += 1
    return frozenset(v for v, d in deg.items() if d >= 3)


def relation(t: HostTree, p: TreePath, q: TreePath) -> Relation:
    p, q = _as_path(p), _as_path(q)
    t.validate_path(p)
    t.validate_path(q)
    return _relation_unchecked(p, q)


def _relation_unchecked(p: TreePath, q: TreePath) -> Relation:
    if p.edges.isdisjoint(q.edges):
        return Relation.PARALLEL
    deg: Counter[int] = Counter()
    for a, b in p.edges | q.edges:
        deg[a] += 1
        deg[b] += 1
    if any(d >= 3 for d in deg.values()):
        return Relation.SPLITTING
    return Relation.NON_SPLITTING


def build_vpt(r: Representation) -> LabeledGraph:
    verts = [frozenset(p.vertices) for p in r.paths]
    return LabeledGraph(
        r.n, frozenset((i, j) for i, j in combinations(range(r.n), 2) if verts[i] & verts[j])
    )


def build_ept(r: Representation) -> LabeledGraph:
    edges = [p.edges for p in r.paths]
    return LabeledGraph(
        r.n, frozenset((i, j) for i, j in combinations(range(r.n), 2) if edges[i] & edges[j])
    )


def build_enpt(r: Representation) -> LabeledGraph:
    ps = r.paths
    return LabeledGraph(
        r.n,
        frozenset(
            (i, j)
            for i, j in combinations(range(r.n), 2)
            if _relation_unchecked(ps[i], ps[j]) is Relation.NON_SPLITTING
        ),
    )


def path_union(t: HostTree, p: TreePath, q: TreePath) -> TreePath:
    """The path whose edge set is ``E(p) | E(q)``, oriented along ``p``."""
    p, q = _as_path(p), _as_path(q)
    rel = relation(t, p, q)
    if rel is not Relation.NON_SPLITTING:
        raise NotUnionableError(f"paths {p.vertices} and {q.vertices} are {rel.value}")
    edges = p.edges | q.edges
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    ends = [v for v, nb in adj.items() if len(nb) == 1]
    if len(edges) != len(adj) - 1 or not ends:
        raise CycleUnionError(f"union of {p.vertices} and {q.vertices} is a cycle")
    seq = [min(ends)]
    prev = None
    while len(seq) <= len(edges):
        nxt = [w for w in adj[seq[-1]] if w != prev]
        if not nxt:
            break
        prev = seq[-1]
        seq.append(nxt[0])
    pos = {v: i for i, v in enumerate(seq)}
    if pos[p.vertices[0]] > pos[p.vertices[-1]]:
        seq.reverse()
    return TreePath(tuple(seq))


def contraction_map(n: int, a: int, b: int) -> list[int]:
    """Vertex map for merging ``a`` and ``b``: the larger label folds into the
    smaller one and labels above it shift down, so cyclic order survives."""
    if a == b or not (0 <= a < n and 0 <= b < n):
        raise MalformedInputError(f"cannot merge {a} and {b} in {n} vertices")
    lo, hi = min(a, b), max(a, b)
    return [lo if v == hi else (v - 1 if v > hi else v) for v in range(n)]


def contract_graph(g: LabeledGraph, a: int, b: int) -> LabeledGraph:
    """Simple-graph contraction of ``{a, b}`` (diagonal loops and parallels dropped)."""
    m = contraction_map(g.n, a, b)
    return LabeledGraph(
        g.n - 1, frozenset(norm_edge(m[x], m[y]) for x, y in g.edges if m[x] != m[y])
    )
