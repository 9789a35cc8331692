"""Independent checks that a representation realizes a pair."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

import networkx as nx

from .core import Edge, LabeledGraph, PairGC, Representation, TreePath, build_enpt, build_ept
from .errors import MalformedInputError


@dataclass(frozen=True)
class VerificationReport:
    ept_ok: bool
    enpt_ok: bool
    ept_missing: tuple[Edge, ...] = ()
    ept_extra: tuple[Edge, ...] = ()
    enpt_missing: tuple[Edge, ...] = ()
    enpt_extra: tuple[Edge, ...] = ()

    @property
    def ok(self) -> bool:
        return self.ept_ok and self.enpt_ok

    def mismatches(self) -> list[str]:
        lines = []
        for name, edges in (
            ("EPT missing", self.ept_missing),
            ("EPT extra", self.ept_extra),
            ("ENPT missing", self.enpt_missing),
            ("ENPT extra", self.enpt_extra),
        ):
            lines.extend(f"{name} {a} {b}" for a, b in edges)
        return lines


def verify_representation(r: Representation, p: PairGC) -> VerificationReport:
    """Compare EPT(r) with G and ENPT(r) with the Hamiltonian cycle of ``p``."""
    if r.n != p.n:
        raise MalformedInputError(f"representation has {r.n} paths, pair has {p.n} vertices")
    ept = build_ept(r).edges
    enpt = build_enpt(r).edges
    want_ept = p.g.edges
    want_enpt = p.cycle.edges
    return VerificationReport(
        ept_ok=ept == want_ept,
        enpt_ok=enpt == want_enpt,
        ept_missing=tuple(sorted(want_ept - ept)),
        ept_extra=tuple(sorted(ept - want_ept)),
        enpt_missing=tuple(sorted(want_enpt - enpt)),
        enpt_extra=tuple(sorted(enpt - want_enpt)),
    )


def _edges_at(path: TreePath, c: int) -> frozenset[Edge]:
    return frozenset(e for e in path.edges if c in e)


def find_pie_center(r: Representation, cyclic_labels: Sequence[int]) -> Optional[int]:
    """Center of a pie formed by the paths ``cyclic_labels`` taken in this cyclic order.

    Each path must cross the center through two of its incident edges, and
    cyclically consecutive paths must share exactly one of those edges, so
    that ``k`` paths use ``k`` distinct center edges.  Returns ``None`` when no
    host vertex qualifies.
    """
    k = len(cyclic_labels)
    if k < 3:
        raise MalformedInputError("a pie has at least 3 paths")
    paths = [r.paths[i] for i in cyclic_labels]
    for c in range(r.tree.vertex_count):
        if r.tree.degree(c) < k:
            continue
        pairs = [_edges_at(p, c) for p in paths]
        if any(len(pr) != 2 for pr in pairs):
            continue
        if len(set(pairs)) != k or len(frozenset().union(*pairs)) != k:
            continue
        if all(len(pairs[i] & pairs[(i + 1) % k]) == 1 for i in range(k)):
            return c
    return None


def red_triangles(p: PairGC) -> list[tuple[int, int, int]]:
    chords = p.chords
    adj = p.g.adjacency
    out = []
    for a, b in sorted(chords):
        for c in sorted(adj[a] & adj[b]):
            if c > b and (a, c) in chords and (b, c) in chords:
                out.append((a, b, c))
    return out


@dataclass(frozen=True)
class P3Result:
    ok: bool
    witness: Optional[tuple[int, int, int]] = None
    centers: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def check_p3(r: Representation, p: PairGC) -> P3Result:
    """Every red triangle of ``p`` must be a claw-clique (a 3-leaf pie) of ``r``."""
    centers = {}
    for tri in red_triangles(p):
        c = find_pie_center(r, tri)
        if c is None:
            return P3Result(False, tri, centers)
        centers[tri] = c
    return P3Result(True, None, centers)


def find_holes(g: LabeledGraph, max_len: int = 10, min_len: int = 3) -> list[tuple[int, ...]]:
    """Chordless cycles with ``min_len <= length <= max_len``.

    Each cycle is rotated to start at its smallest vertex and oriented so that
    the second vertex is smaller than the last; the list is sorted.
    """
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    out = []
    for cyc in nx.chordless_cycles(nxg, length_bound=max_len):
        if len(cyc) < max(min_len, 3):
            continue
        i = cyc.index(min(cyc))
        cyc = cyc[i:] + cyc[:i]
        if cyc[1] > cyc[-1]:
            cyc = [cyc[0]] + cyc[:0:-1]
        out.append(tuple(cyc))
    return sorted(set(out))


def is_clique(g: LabeledGraph, vertices: Sequence[int]) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(vertices, 2))
