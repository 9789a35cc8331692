"""Maximal and maximum cliques of an ENPT graph, read off its representation.

A clique of pairwise non-splitting paths is collinear: all its members lie
on one leaf-to-leaf path of the subtree spanned by the paths through some
common edge.  Enumerating, per tree edge ``e``, the leaf pairs of that
subtree gives at most ``|V(T)|^3`` candidate sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Edge, HostTree, Representation, TreePath, path_union
from .errors import InvariantViolation, NotUnionableError


@dataclass(frozen=True)
class EdgeSubcollection:
    """Paths through ``edge`` that lie on the tree path between ``leaves``."""

    edge: Edge
    leaves: tuple[int, int]
    members: tuple[int, ...]


@dataclass(frozen=True)
class CliqueEnumeration:
    cliques: tuple[tuple[int, ...], ...]
    candidates: int
    subcollections: tuple[EdgeSubcollection, ...]


def _subtree_leaves(edges: set[Edge]) -> list[int]:
    deg: dict[int, int] = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return sorted(v for v, d in deg.items() if d == 1)


def edge_subcollections(r: Representation) -> list[EdgeSubcollection]:
    t = r.tree
    out = []
    for e in sorted(t.edges):
        through = [i for i, p in enumerate(r.paths) if e in p.edges]
        if not through:
            continue
        span: set[Edge] = set()
        for i in through:
            span |= r.paths[i].edges
        for li, lj in combinations(_subtree_leaves(span), 2):
            route = t.path_between(li, lj).edges
            if e not in route:
                continue
            members = tuple(i for i in through if r.paths[i].edges <= route)
            out.append(EdgeSubcollection(e, (li, lj), members))
    return out


def _check_collinear(t: HostTree, r: Representation, clique: tuple[int, ...]) -> None:
    union: TreePath = r.paths[clique[0]]
    try:
        for i in clique[1:]:
            union = path_union(t, union, r.paths[i])
    except NotUnionableError as exc:
        raise InvariantViolation(f"clique {clique} does not union to a path: {exc}") from None


def enumerate_maximal_cliques_with_stats(r: Representation) -> CliqueEnumeration:
    subs = edge_subcollections(r)
    distinct = sorted({s.members for s in subs if s.members})
    sets = [frozenset(c) for c in distinct]
    maximal = tuple(c for c, s in zip(distinct, sets) if not any(s < o for o in sets))
    for c in maximal:
        _check_collinear(r.tree, r, c)
    return CliqueEnumeration(maximal, len(subs), tuple(subs))


def enumerate_maximal_cliques(r: Representation) -> list[tuple[int, ...]]:
    """Maximal cliques of ``build_enpt(r)`` as sorted label tuples, sorted."""
    return list(enumerate_maximal_cliques_with_stats(r).cliques)


def max_clique(r: Representation) -> tuple[int, ...]:
    """A largest clique; ties go to the lexicographically smallest tuple."""
    cliques = enumerate_maximal_cliques(r)
    return min(cliques, key=lambda c: (-len(c), c))


__all__ = [
    "EdgeSubcollection",
    "CliqueEnumeration",
    "edge_subcollections",
    "enumerate_maximal_cliques",
    "enumerate_maximal_cliques_with_stats",
    "max_clique",
]
