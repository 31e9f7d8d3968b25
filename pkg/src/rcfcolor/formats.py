"""Text formats for matroids, graphs, colorings, subsets and families.

Matroid files start with a header line:

    uniform r n
    binary r n     (followed by r rows of n characters, each 0 or 1)
    graph n m      (followed by m lines "u v"; elements are edges in order)
    cograph n m    (same body; the matroid is the co-graphic one)

A coloring file holds one line of n color indices that form a contiguous
range from 0. Family files hold one subset per line. Blank lines are
ignored everywhere.
"""

from __future__ import annotations

from .binary import BinaryMatroid
from .coloring import Coloring
from .core import InputError, Matroid, UniformMatroid
from .graphic import Graph, cographic_matroid, graphic_matroid
from .subsets import elements_of, mask_of

__all__ = [
    "parse_matroid",
    "load_matroid",
    "dump_uniform",
    "dump_binary",
    "dump_graph",
    "parse_coloring",
    "load_coloring",
    "dump_coloring",
    "parse_subset",
    "format_subset",
    "load_family",
]


def _lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def parse_matroid(text: str, *, cograph: bool = False) -> Matroid:
    """Parse a matroid file; `cograph` reinterprets a graph body."""
    lines = _lines(text)
    if not lines:
        raise InputError("empty matroid file")
    head = lines[0].split()
    kind = head[0]
    if kind == "uniform":
        if len(head) != 3:
            raise InputError("uniform header needs rank and size")
        r, n = _ints(head[1:])
        return UniformMatroid(r, n)
    if kind == "binary":
        if len(head) != 3:
            raise InputError("binary header needs rank and size")
        r, n = _ints(head[1:])
        rows = lines[1:]
        if len(rows) != r:
            raise InputError("binary matrix must have %d rows" % r)
        matrix = []
        for row in rows:
            row = row.replace(" ", "")
            if len(row) != n or set(row) - {"0", "1"}:
                raise InputError("binary rows must be %d characters of 0/1" % n)
            matrix.append([int(ch) for ch in row])
        return BinaryMatroid.from_matrix(matrix)
    if kind in ("graph", "cograph"):
        if len(head) != 3:
            raise InputError("graph header needs vertex and edge counts")
        n, m = _ints(head[1:])
        body = lines[1:]
        if len(body) != m:
            raise InputError("graph body must list %d edges" % m)
        edges = []
        for line in body:
            parts = _ints(line.split())
            if len(parts) != 2:
                raise InputError("edge lines need two endpoints")
            edges.append((parts[0], parts[1]))
        graph = Graph(n, tuple(edges))
        if kind == "cograph" or cograph:
            return cographic_matroid(graph)
        return graphic_matroid(graph)
    raise InputError("unknown matroid kind %r" % kind)


def _ints(parts) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise InputError("expected integers: %s" % exc) from None


def load_matroid(path: str, *, cograph: bool = False) -> Matroid:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    return parse_matroid(text, cograph=cograph)


def dump_uniform(r: int, n: int) -> str:
    return "uniform %d %d\n" % (r, n)


def dump_binary(matroid: BinaryMatroid) -> str:
    lines = ["binary %d %d" % (len(matroid.rows), matroid.n)]
    for row in matroid.rows:
        lines.append("".join("1" if row >> i & 1 else "0" for i in range(matroid.n)))
    return "\n".join(lines) + "\n"


def dump_graph(graph: Graph, *, cograph: bool = False) -> str:
    head = "cograph" if cograph else "graph"
    lines = ["%s %d %d" % (head, graph.vertex_count, graph.edge_count)]
    for u, v in graph.edges:
        lines.append("%d %d" % (u, v))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: int) -> Coloring:
    lines = _lines(text)
    if len(lines) != 1:
        raise InputError("coloring files hold a single line")
    colors = _ints(lines[0].split())
    if len(colors) != n:
        raise InputError("coloring must assign all %d elements" % n)
    return Coloring.from_assignment(colors)


def load_coloring(path: str, n: int) -> Coloring:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    return parse_coloring(text, n)


def dump_coloring(coloring: Coloring) -> str:
    return " ".join(str(c) for c in coloring.assignment()) + "\n"


def parse_subset(text: str, n: int) -> int:
    parts = text.split()
    mask = 0
    for p in _ints(parts):
        if not 0 <= p < n:
            raise InputError("element %d outside the ground set" % p)
        mask |= 1 << p
    return mask


def format_subset(mask: int) -> str:
    return " ".join(str(e) for e in elements_of(mask))


def load_family(path: str, n: int) -> list[int]:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    return [parse_subset(line, n) for line in _lines(text)]
