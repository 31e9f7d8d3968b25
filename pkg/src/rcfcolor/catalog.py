"""Deterministic corpus of small matroids used by the verification suites.

The GF(2) family enumerates column multisets of nonzero vectors and
deduplicates by sorted circuit lists; isomorphism rejection beyond that is
deliberately not attempted. Named fixtures add the usual suspects.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binary import BinaryMatroid
from .core import InputError, Matroid, UniformMatroid, direct_sum
from .graphic import Graph, cographic_matroid, graphic_matroid

__all__ = [
    "CatalogEntry",
    "gf2_family",
    "fixtures",
    "binary_catalog",
    "full_catalog",
    "FANO_ROWS",
    "k_complete",
    "k5_minus_edge",
    "prism_graph",
    "doubled_triangle",
]

MAX_R = 4
MAX_N = 7

# Fano plane: the seven nonzero GF(2)^3 columns
FANO_ROWS = (
    (0, 0, 0, 1, 1, 1, 1),
    (0, 1, 1, 0, 0, 1, 1),
    (1, 0, 1, 0, 1, 0, 1),
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matroid: Matroid
    binary: bool | None


def _column_multisets(r: int, n: int):
    """Nondecreasing tuples of n nonzero r-bit columns."""
    top = 1 << r

    def rec(start: int, left: int, prefix: tuple[int, ...]):
        if left == 0:
            yield prefix
            return
        for c in range(start, top):
            yield from rec(c, left - 1, prefix + (c,))

    yield from rec(1, n, ())


def _matroid_from_columns(cols: tuple[int, ...], r: int) -> BinaryMatroid:
    rows = []
    for j in range(r):
        m = 0
        for i, c in enumerate(cols):
            if c >> j & 1:
                m |= 1 << i
        rows.append(m)
    return BinaryMatroid(tuple(rows), len(cols))


def gf2_family(max_r: int = 3, max_n: int = 6) -> list[CatalogEntry]:
    """All loopless GF(2)-matrix matroids up to the caps, deduplicated."""
    if max_r > MAX_R or max_n > MAX_N:
        raise InputError("catalog caps are r <= 4, n <= 7")
    seen: dict[tuple[int, tuple[int, ...]], BinaryMatroid] = {}
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            for cols in _column_multisets(r, n):
                m = _matroid_from_columns(cols, r)
                key = (n, m.circuits_nullspace())
                if key not in seen:
                    seen[key] = m
    entries = []
    for i, key in enumerate(sorted(seen, key=lambda k: (k[0], len(k[1]), k[1]))):
        m = seen[key]
        entries.append(CatalogEntry("gf2_n%d_%03d" % (key[0], i), m, True))
    return entries


def k_complete(nv: int) -> Graph:
    edges = tuple(
        (u, v) for u in range(nv) for v in range(u + 1, nv)
    )
    return Graph(nv, edges)


def k5_minus_edge() -> Graph:
    edges = tuple(
        (u, v)
        for u in range(5)
        for v in range(u + 1, 5)
        if (u, v) != (3, 4)
    )
    return Graph(5, edges)


def prism_graph() -> Graph:
    return Graph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)))


def doubled_triangle() -> Graph:
    return Graph(3, ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)))


def fixtures() -> list[CatalogEntry]:
    fano = BinaryMatroid.from_matrix(FANO_ROWS)
    return [
        CatalogEntry("u24", UniformMatroid(2, 4), False),
        CatalogEntry("u25", UniformMatroid(2, 5), False),
        CatalogEntry("u35", UniformMatroid(3, 5), False),
        CatalogEntry(
            "u24_plus_coloop",
            direct_sum(UniformMatroid(2, 4), UniformMatroid(1, 1)),
            False,
        ),
        CatalogEntry("fano", fano, True),
        CatalogEntry("graphic_k3", graphic_matroid(k_complete(3)), True),
        CatalogEntry("graphic_k4", graphic_matroid(k_complete(4)), True),
        CatalogEntry("graphic_k5e", graphic_matroid(k5_minus_edge()), True),
        CatalogEntry("cographic_k4", cographic_matroid(k_complete(4)), True),
        CatalogEntry(
            "graphic_doubled_k3", graphic_matroid(doubled_triangle()), True
        ),
    ]


def binary_catalog(max_r: int = 3, max_n: int = 6) -> list[CatalogEntry]:
    """The GF(2) family plus the named binary fixtures."""
    out = gf2_family(max_r, max_n)
    out += [e for e in fixtures() if e.name in ("fano", "graphic_k4", "graphic_k5e")]
    return out


def full_catalog(max_r: int = 3, max_n: int = 6) -> list[CatalogEntry]:
    return gf2_family(max_r, max_n) + fixtures()
