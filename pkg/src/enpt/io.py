"""Line-oriented text formats for pairs, representations and graphs.

Pair file::

    pair <n>
    chord <u> <v>        # one line per non-cycle edge

Representation file::

    tree <t>
    tedge <a> <b>
    path <label>: <v0> <v1> ... <vk>

Graph file::

    graph <n>
    edge <u> <v>

Blank lines and ``#`` comments are ignored.  ``emit_*`` writes a normalized,
sorted form, so ``parse(emit(x)) == x`` and emitting is deterministic.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator

from .core import HostTree, LabeledGraph, PairGC, Representation, TreePath, norm_edge
from .errors import MalformedInputError


class ParseError(MalformedInputError):
    """Syntax error, tagged with a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SemanticError(MalformedInputError):
    """Well-formed text describing an invalid object."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


_TOKEN = re.compile(r":|[^\s:#]+")


def _lines(text: str) -> Iterator[tuple[int, str, list[tuple[int, str]]]]:
    """Yield (line number, raw line, [(column, token)]) for non-empty lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]
        if toks:
            yield no, raw, toks


def _int(tok: tuple[int, str], line: int) -> int:
    col, s = tok
    try:
        v = int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}", line, col) from None
    if v < 0:
        raise ParseError(f"expected a non-negative integer, got {v}", line, col)
    return v


def _expect(toks, count: int, line: int, what: str) -> None:
    if len(toks) != count:
        col = toks[min(len(toks), count) - 1][0] if toks else 1
        raise ParseError(f"{what} takes {count - 1} argument(s)", line, col)


def _header(lines, keyword: str):
    try:
        no, _, toks = next(lines)
    except StopIteration:
        raise ParseError(f"empty input, expected '{keyword} <n>'", 1) from None
    if toks[0][1] != keyword:
        raise ParseError(f"expected '{keyword}', got {toks[0][1]!r}", no, toks[0][0])
    _expect(toks, 2, no, keyword)
    return no, _int(toks[1], no)


def parse_pair(text: str) -> PairGC:
    lines = _lines(text)
    hno, n = _header(lines, "pair")
    if n < 3:
        raise SemanticError(f"pair needs n >= 3, got {n}", hno)
    chords = set()
    for no, _, toks in lines:
        if toks[0][1] != "chord":
            raise ParseError(f"expected 'chord', got {toks[0][1]!r}", no, toks[0][0])
        _expect(toks, 3, no, "chord")
        u, v = _int(toks[1], no), _int(toks[2], no)
        if u >= n or v >= n:
            raise SemanticError(f"chord {u} {v} out of range for n={n}", no)
        if u == v:
            raise SemanticError(f"chord {u} {v} is a self-loop", no)
        if (v - u) % n in (1, n - 1):
            raise SemanticError(f"chord {u} {v} duplicates a cycle edge", no)
        e = norm_edge(u, v)
        if e in chords:
            raise SemanticError(f"chord {u} {v} listed twice", no)
        chords.add(e)
    return PairGC.from_chords(n, chords)


def emit_pair(p: PairGC) -> str:
    out = [f"pair {p.n}"]
    out += [f"chord {a} {b}" for a, b in sorted(p.chords)]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> LabeledGraph:
    lines = _lines(text)
    hno, n = _header(lines, "graph")
    edges = set()
    for no, _, toks in lines:
        if toks[0][1] != "edge":
            raise ParseError(f"expected 'edge', got {toks[0][1]!r}", no, toks[0][0])
        _expect(toks, 3, no, "edge")
        u, v = _int(toks[1], no), _int(toks[2], no)
        if u >= n or v >= n or u == v:
            raise SemanticError(f"edge {u} {v} invalid for n={n}", no)
        edges.add(norm_edge(u, v))
    return LabeledGraph(n, frozenset(edges))


def emit_graph(g: LabeledGraph) -> str:
    out = [f"graph {g.n}"]
    out += [f"edge {a} {b}" for a, b in g.sorted_edges()]
    return "\n".join(out) + "\n"


def parse_representation(text: str) -> Representation:
    lines = _lines(text)
    hno, t = _header(lines, "tree")
    if t < 1:
        raise SemanticError("host tree needs at least one vertex", hno)
    tedges = set()
    paths: dict[int, tuple[int, tuple[int, ...]]] = {}
    for no, _, toks in lines:
        kw = toks[0][1]
        if kw == "tedge":
            if paths:
                raise ParseError("'tedge' after the first 'path'", no, toks[0][0])
            _expect(toks, 3, no, "tedge")
            a, b = _int(toks[1], no), _int(toks[2], no)
            if a >= t or b >= t or a == b:
                raise SemanticError(f"tree edge {a} {b} invalid for {t} vertices", no)
            tedges.add(norm_edge(a, b))
        elif kw == "path":
            if len(toks) < 3 or toks[2][1] != ":":
                col = toks[2][0] if len(toks) > 2 else toks[-1][0]
                raise ParseError("expected 'path <label>: <v0> ... <vk>'", no, col)
            label = _int(toks[1], no)
            if label in paths:
                raise SemanticError(f"path label {label} repeated", no)
            verts = tuple(_int(tok, no) for tok in toks[3:])
            paths[label] = (no, verts)
        else:
            raise ParseError(f"unknown keyword {kw!r}", no, toks[0][0])
    try:
        tree = HostTree(t, frozenset(tedges))
    except MalformedInputError as exc:
        raise SemanticError(str(exc)) from None
    if sorted(paths) != list(range(len(paths))) or not paths:
        raise SemanticError("path labels must be dense from 0")
    built = []
    for label in range(len(paths)):
        no, verts = paths[label]
        try:
            p = TreePath(verts)
            tree.validate_path(p)
        except MalformedInputError as exc:
            raise SemanticError(f"path {label}: {exc}", no) from None
        built.append(p)
    return Representation(tree, tuple(built))


def emit_representation(r: Representation) -> str:
    out = [f"tree {r.tree.vertex_count}"]
    out += [f"tedge {a} {b}" for a, b in sorted(r.tree.edges)]
    out += [f"path {i}: " + " ".join(map(str, p.vertices)) for i, p in enumerate(r.paths)]
    return "\n".join(out) + "\n"


def sniff(text: str) -> str:
    """First keyword of a file: 'pair', 'tree' or 'graph'."""
    for _, _, toks in _lines(text):
        return toks[0][1]
    return ""


def read_pair(path: str | Path) -> PairGC:
    return parse_pair(Path(path).read_text())


def read_representation(path: str | Path) -> Representation:
    return parse_representation(Path(path).read_text())


def read_graph(path: str | Path) -> LabeledGraph:
    return parse_graph(Path(path).read_text())
