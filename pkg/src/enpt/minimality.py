"""Minifying operations, equivalence and minimality of representations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Union

from .core import (
    Edge,
    HostTree,
    Representation,
    TreePath,
    build_enpt,
    build_ept,
    contract_graph,
    contraction_map,
    norm_edge,
    path_union,
)
from .errors import IllegalMinifyError, InvariantViolation, MalformedInputError


@dataclass(frozen=True)
class ContractTreeEdge:
    edge: Edge


@dataclass(frozen=True)
class RemoveTail:
    label: int
    end: Literal["front", "back"]


MinifyOp = Union[ContractTreeEdge, RemoveTail]


def _contract_tree(r: Representation, edge: Edge) -> Representation:
    a, b = norm_edge(*edge)
    if not r.tree.has_edge(a, b):
        raise MalformedInputError(f"{(a, b)} is not a host tree edge")
    m = contraction_map(r.tree.vertex_count, a, b)
    tree = HostTree(
        r.tree.vertex_count - 1,
        frozenset(norm_edge(m[x], m[y]) for x, y in r.tree.edges if (x, y) != (a, b)),
    )
    paths = []
    for label, p in enumerate(r.paths):
        seq: list[int] = []
        for v in p.vertices:
            w = m[v]
            if not seq or seq[-1] != w:
                seq.append(w)
        if len(seq) < 2:
            raise IllegalMinifyError(f"contracting {(a, b)} makes path {label} trivial")
        paths.append(TreePath(tuple(seq)))
    return Representation(tree, tuple(paths))


def apply_minify(r: Representation, op: MinifyOp) -> Representation:
    if isinstance(op, ContractTreeEdge):
        return _contract_tree(r, op.edge)
    if isinstance(op, RemoveTail):
        if not 0 <= op.label < r.n:
            raise MalformedInputError(f"no path labelled {op.label}")
        p = r.paths[op.label]
        if p.length < 2:
            raise IllegalMinifyError(f"path {op.label} has a single edge")
        if op.end == "front":
            new = TreePath(p.vertices[1:])
        elif op.end == "back":
            new = TreePath(p.vertices[:-1])
        else:
            raise MalformedInputError(f"unknown path end {op.end!r}")
        paths = list(r.paths)
        paths[op.label] = new
        return Representation(r.tree, tuple(paths))
    raise MalformedInputError(f"unknown minifying operation {op!r}")


def legal_minify_ops(r: Representation) -> Iterator[MinifyOp]:
    """Minifying operations that keep every path non-trivial."""
    sole = {p.edge_list[0] for p in r.paths if p.length == 1}
    for e in sorted(r.tree.edges):
        if e not in sole:
            yield ContractTreeEdge(e)
    for label, p in enumerate(r.paths):
        if p.length >= 2:
            yield RemoveTail(label, "front")
            yield RemoveTail(label, "back")


def is_equivalent(r1: Representation, r2: Representation) -> bool:
    """Same EPT and ENPT graphs under the identity label correspondence."""
    if r1.n != r2.n:
        return False
    return build_ept(r1) == build_ept(r2) and build_enpt(r1) == build_enpt(r2)


def equivalent_reduction(r: Representation) -> MinifyOp | None:
    """A single legal minifying step that preserves the pair, if any."""
    ept, enpt = build_ept(r), build_enpt(r)
    for op in legal_minify_ops(r):
        r2 = apply_minify(r, op)
        if build_ept(r2) == ept and build_enpt(r2) == enpt:
            return op
    return None


def is_minimal(r: Representation) -> bool:
    """True when no single minifying step yields an equivalent representation."""
    return equivalent_reduction(r) is None


def minimize(r: Representation) -> Representation:
    """Apply equivalent minifying steps greedily until none is left."""
    while (op := equivalent_reduction(r)) is not None:
        r = apply_minify(r, op)
    return r


def contract_representation(r: Representation, p: int, q: int) -> Representation:
    """Replace paths ``p`` and ``q`` by their union (kept at the smaller label).

    Raises ``NotUnionableError`` unless the two paths are non-splitting.  The
    EPT graph of the result is checked against the contraction of EPT(r).
    """
    if p == q or not (0 <= p < r.n and 0 <= q < r.n):
        raise MalformedInputError(f"bad label pair {(p, q)}")
    union = path_union(r.tree, r.paths[p], r.paths[q])
    lo, hi = min(p, q), max(p, q)
    paths = list(r.paths)
    paths[lo] = union
    del paths[hi]
    out = Representation(r.tree, tuple(paths))
    expected = contract_graph(build_ept(r), p, q)
    if build_ept(out) != expected:
        raise InvariantViolation(f"EPT of union on {(p, q)} differs from contracted EPT")
    return out


__all__ = [
    "ContractTreeEdge",
    "RemoveTail",
    "MinifyOp",
    "apply_minify",
    "legal_minify_ops",
    "is_equivalent",
    "is_minimal",
    "minimize",
    "equivalent_reduction",
    "contract_representation",
    "contraction_map",
]
