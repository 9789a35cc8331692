"""Edge-intersecting non-splitting paths in a tree (ENPT graphs).

Build VPT/EPT/ENPT graphs of path families, construct representations of
trees, cycles, cliques and tours, analyse pairs ``(G, C)`` of a graph with a
Hamiltonian cycle, and solve the P3-restricted representation problem.
"""

from .core import (
    HostTree,
    LabeledGraph,
    PairGC,
    Relation,
    Representation,
    TreePath,
    build_enpt,
    build_ept,
    build_vpt,
    path_union,
    relation,
    split_vertices,
)
from .errors import EnptError

__all__ = [
    "EnptError",
    "HostTree",
    "LabeledGraph",
    "PairGC",
    "Relation",
    "Representation",
    "TreePath",
    "build_enpt",
    "build_ept",
    "build_vpt",
    "path_union",
    "relation",
    "split_vertices",
]
