"""Graphviz DOT export for representations and pairs."""

from __future__ import annotations

from .core import PairGC, Representation

PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def representation_to_dot(r: Representation) -> str:
    """Host tree in light grey with every path drawn as its own coloured chain."""
    out = ["graph representation {", "  node [shape=circle];"]
    out += [f"  {v};" for v in range(r.tree.vertex_count)]
    out += [f'  {a} -- {b} [color="#cccccc", penwidth=4];' for a, b in sorted(r.tree.edges)]
    for i, p in enumerate(r.paths):
        color = PALETTE[i % len(PALETTE)]
        for a, b in zip(p.vertices, p.vertices[1:]):
            out.append(f'  {a} -- {b} [color="{color}", label="P{i}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def pair_to_dot(p: PairGC) -> str:
    """Cycle edges blue, chords red; circo places the vertices on a circle."""
    out = ["graph pair {", "  layout=circo;", "  node [shape=circle];"]
    out += [f"  {v};" for v in range(p.n)]
    out += [f"  {a} -- {b} [color=blue];" for a, b in p.cycle_edges()]
    out += [f"  {a} -- {b} [color=red];" for a, b in sorted(p.chords)]
    out.append("}")
    return "\n".join(out) + "\n"
