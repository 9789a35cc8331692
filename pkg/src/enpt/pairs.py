"""Structure of pairs ``(G, C)``: triangles, P1/P2, outerplanarity, weak dual trees.

Vertices are numbered along the Hamiltonian cycle ``C``, so a pair is fully
described by its chords.  With the cycle fixed as the outer boundary,
outerplanarity reduces to chords not crossing, and the bounded faces are the
polygons cut out by the chords.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .core import Edge, LabeledGraph, PairGC, contraction_map, norm_edge
from .errors import ContractibilityError, InvariantViolation, MalformedInputError


class TriangleKind(enum.Enum):
    RED = 0
    BRR = 1
    BBR = 2
    BLUE = 3


class FaceKind(enum.Enum):
    ISOLATED = "isolated"
    LEAF = "leaf"
    INTERMEDIATE = "intermediate"
    JUNCTION = "junction"


def classify_triangle(p: PairGC, tri: Sequence[int]) -> TriangleKind:
    a, b, c = tri
    if len({a, b, c}) != 3 or not all(p.g.has_edge(x, y) for x, y in ((a, b), (b, c), (a, c))):
        raise MalformedInputError(f"{tuple(tri)} is not a triangle of G")
    blue = sum(p.is_cycle_edge(x, y) for x, y in ((a, b), (b, c), (a, c)))
    return TriangleKind(blue)


def triangles(g: LabeledGraph) -> list[tuple[int, int, int]]:
    adj = g.adjacency
    out = []
    for a, b in sorted(g.edges):
        for c in sorted(adj[a] & adj[b]):
            if c > b:
                out.append((a, b, c))
    return out


def bbr_triangles(p: PairGC) -> list[tuple[int, int, int]]:
    return [t for t in triangles(p.g) if classify_triangle(p, t) is TriangleKind.BBR]


def bbr_apex(p: PairGC, tri: Sequence[int]) -> int:
    """The vertex of a BBR triangle incident to both of its cycle edges."""
    for v in tri:
        others = [w for w in tri if w != v]
        if all(p.is_cycle_edge(v, w) for w in others):
            return v
    raise MalformedInputError(f"{tuple(tri)} is not a BBR triangle")


def _contractible_by_closing_edges(p: PairGC) -> set[Edge]:
    n = p.n
    out = set()
    for i in range(n):
        j = (i + 1) % n
        # incident cycle edges {i-1, i} and {j, j+1} close the triangles with these chords
        closing = (norm_edge((i - 1) % n, j), norm_edge(i, (j + 1) % n))
        if not any(e in p.chords for e in closing):
            out.add(norm_edge(i, j))
    return out


def _contractible_by_bbr(p: PairGC) -> set[Edge]:
    covered = set()
    for a, b, c in bbr_triangles(p):
        for x, y in ((a, b), (b, c), (a, c)):
            if p.is_cycle_edge(x, y):
                covered.add(norm_edge(x, y))
    return set(p.cycle_edges()) - covered


def contractible_edges(p: PairGC) -> frozenset[Edge]:
    """Cycle edges on which the pair may be contracted (those in no BBR triangle)."""
    first = _contractible_by_closing_edges(p)
    second = _contractible_by_bbr(p)
    if first != second:
        raise InvariantViolation(f"contractibility characterizations disagree: {first} vs {second}")
    return frozenset(first)


def satisfies_p1(p: PairGC) -> bool:
    return not contractible_edges(p)


def is_k4p4_free(p: PairGC) -> bool:
    """No four vertices inducing K4 in G whose induced cycle edges form a P4."""
    adj = p.g.adjacency
    for a, b in sorted(p.g.edges):
        common = sorted(c for c in adj[a] & adj[b] if c > b)
        for c, d in combinations(common, 2):
            if not p.g.has_edge(c, d):
                continue
            quad = (a, b, c, d)
            blue = [e for e in combinations(quad, 2) if p.is_cycle_edge(*e)]
            if len(blue) == 3 and _is_path(quad, blue):
                return False
    return True


def _is_path(vertices: Sequence[int], edges: Sequence[Edge]) -> bool:
    deg = {v: 0 for v in vertices}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return sorted(deg.values()) == [1, 1, 2, 2]


def chords_cross(e: Edge, f: Edge) -> bool:
    a, b = sorted(e)
    c, d = sorted(f)
    return a < c < b < d or c < a < d < b


def is_outerplanar_with_outer_cycle(p: PairGC) -> bool:
    return not any(chords_cross(e, f) for e, f in combinations(sorted(p.chords), 2))


def maximal_outerplanar_subgraph(p: PairGC) -> LabeledGraph:
    """Cycle plus greedily added chords, in lexicographic order, skipping crossers."""
    kept: list[Edge] = []
    for e in sorted(p.chords):
        if not any(chords_cross(e, f) for f in kept):
            kept.append(e)
    return LabeledGraph(p.n, p.cycle.edges | frozenset(kept))


def _faces(n: int, chords: Sequence[Edge]) -> list[tuple[int, ...]]:
    """Bounded faces of the cycle ``0..n-1`` cut by pairwise non-crossing chords."""
    faces = []
    stack = [tuple(range(n))]
    while stack:
        poly = stack.pop()
        pos = {v: i for i, v in enumerate(poly)}
        split = None
        for a, b in chords:
            if a in pos and b in pos:
                i, j = sorted((pos[a], pos[b]))
                if j - i not in (1, len(poly) - 1):
                    split = (i, j)
                    break
        if split is None:
            faces.append(tuple(sorted(poly)))
            continue
        i, j = split
        stack.append(poly[i : j + 1])
        stack.append(poly[j:] + poly[: i + 1])
    return sorted(faces)


@dataclass(frozen=True)
class WeakDualTree:
    """Faces of the outerplanar subgraph and their adjacency across chords."""

    n: int
    faces: tuple[tuple[int, ...], ...]
    adjacency: frozenset[tuple[int, int]]
    chord_of: dict = field(compare=False)
    kinds: tuple[FaceKind, ...] = ()

    def degree(self, f: int) -> int:
        return sum(f in e for e in self.adjacency)

    def face_index(self, face: Sequence[int]) -> int:
        key = tuple(sorted(face))
        try:
            return self.faces.index(key)
        except ValueError:
            raise MalformedInputError(f"{key} is not a face") from None

    def neighbors(self, f: int) -> list[int]:
        return sorted(b if a == f else a for a, b in self.adjacency if f in (a, b))

    def blue_edges(self, f: int) -> int:
        face = self.faces[f]
        k = len(face)
        return sum(
            (face[(i + 1) % k] - face[i]) % self.n in (1, self.n - 1) for i in range(k)
        )

    @property
    def leaves(self) -> list[int]:
        return [i for i, k in enumerate(self.kinds) if k is FaceKind.LEAF]

    @property
    def intermediates(self) -> list[int]:
        return [i for i, k in enumerate(self.kinds) if k is FaceKind.INTERMEDIATE]

    @property
    def junctions(self) -> list[int]:
        return [i for i, k in enumerate(self.kinds) if k is FaceKind.JUNCTION]

    def count_identity_holds(self) -> bool:
        """``n == 2 * leaves + intermediates``; true whenever leaves and
        intermediates are triangles and junctions carry no cycle edge."""
        return self.n == 2 * len(self.leaves) + len(self.intermediates)

    def is_path(self) -> bool:
        return all(self.degree(f) <= 2 for f in range(len(self.faces)))

    def structure(self) -> tuple[frozenset, frozenset]:
        """Face sets and dual edges as face pairs (for index-free comparison)."""
        fs = frozenset(self.faces)
        es = frozenset(frozenset((self.faces[a], self.faces[b])) for a, b in self.adjacency)
        return fs, es


def _classify(deg: int) -> FaceKind:
    if deg == 0:
        return FaceKind.ISOLATED
    if deg == 1:
        return FaceKind.LEAF
    if deg == 2:
        return FaceKind.INTERMEDIATE
    return FaceKind.JUNCTION


def _build_wdt(n: int, faces: list[tuple[int, ...]], chords: Sequence[Edge]) -> WeakDualTree:
    on: dict[Edge, list[int]] = {e: [] for e in chords}
    for idx, face in enumerate(faces):
        k = len(face)
        for i in range(k):
            e = norm_edge(face[i], face[(i + 1) % k])
            if e in on:
                on[e].append(idx)
    adjacency = set()
    chord_of = {}
    for e, fs in on.items():
        if len(fs) != 2:
            raise InvariantViolation(f"chord {e} borders {len(fs)} faces")
        d = (min(fs), max(fs))
        adjacency.add(d)
        chord_of[d] = e
    degs = [sum(i in d for d in adjacency) for i in range(len(faces))]
    wdt = WeakDualTree(
        n=n,
        faces=tuple(faces),
        adjacency=frozenset(adjacency),
        chord_of=chord_of,
        kinds=tuple(_classify(d) for d in degs),
    )
    if len(adjacency) != len(faces) - 1:
        raise InvariantViolation("weak dual graph is not a tree")
    return wdt


def weak_dual_tree(p: PairGC) -> WeakDualTree:
    """Weak dual tree of the maximal outerplanar subgraph of ``p``."""
    o = maximal_outerplanar_subgraph(p)
    chords = sorted(e for e in o.edges if not p.is_cycle_edge(*e))
    return _build_wdt(p.n, _faces(p.n, chords), chords)


def smooth_intermediate(w: WeakDualTree, face: Sequence[int] | int) -> WeakDualTree:
    """Remove a degree-2 face and join its two neighbours directly.

    The new dual edge carries the chord of the first neighbour's old edge;
    under the contraction that removes the face both chords coincide.
    """
    f = face if isinstance(face, int) else w.face_index(face)
    deg = w.degree(f)
    if deg != 2:
        raise MalformedInputError(f"face {w.faces[f]} has dual degree {deg}, expected 2")
    a, b = w.neighbors(f)
    keep = [i for i in range(len(w.faces)) if i != f]
    index = {old: new for new, old in enumerate(keep)}
    adjacency = set()
    chord_of = {}
    for (x, y), chord in w.chord_of.items():
        if f in (x, y):
            continue
        d = (index[x], index[y])
        adjacency.add(d)
        chord_of[d] = chord
    joined = tuple(sorted((index[a], index[b])))
    adjacency.add(joined)
    chord_of[joined] = w.chord_of[(min(a, f), max(a, f))]
    degs = [sum(i in d for d in adjacency) for i in range(len(keep))]
    return WeakDualTree(
        n=w.n - 1,
        faces=tuple(w.faces[i] for i in keep),
        adjacency=frozenset(adjacency),
        chord_of=chord_of,
        kinds=tuple(_classify(d) for d in degs),
    )


def contract_pair(p: PairGC, e: Sequence[int]) -> PairGC:
    """Contract the cycle edge ``e`` in both G and C and renumber along the cycle."""
    a, b = norm_edge(*e)
    if not p.is_cycle_edge(a, b):
        raise MalformedInputError(f"{(a, b)} is not a cycle edge")
    if (a, b) not in contractible_edges(p):
        raise ContractibilityError(f"cycle edge {(a, b)} lies in a BBR triangle")
    if p.n <= 3:
        raise ContractibilityError("contracting a triangle leaves no cycle")
    m = contraction_map(p.n, a, b)
    edges = frozenset(norm_edge(m[x], m[y]) for x, y in p.g.edges if m[x] != m[y])
    return PairGC(LabeledGraph(p.n - 1, edges))


def map_wdt_faces(w: WeakDualTree, mapping: Sequence[int]) -> tuple[frozenset, frozenset]:
    """Structure of ``w`` after pushing every face through a vertex map."""
    faces = [tuple(sorted(set(mapping[v] for v in f))) for f in w.faces]
    fs = frozenset(faces)
    es = frozenset(frozenset((faces[a], faces[b])) for a, b in w.adjacency)
    return fs, es


def brr_face_of(p: PairGC, w: WeakDualTree, e: Edge) -> int | None:
    """The face of the outerplanar subgraph that is a BRR triangle containing ``e``."""
    hits = [
        i
        for i, face in enumerate(w.faces)
        if len(face) == 3 and set(e) <= set(face) and classify_triangle(p, face) is TriangleKind.BRR
    ]
    return hits[0] if len(hits) == 1 else None
