"""Shared builders for the test suite.

Plain functions rather than fixtures: most tests want the same handful
of small structures and fixtures would just add indirection.
"""

from rcfcolor import (
    BinaryMatroid,
    FANO_ROWS,
    Graph,
    GraphicMatroid,
    UniformMatroid,
)


def mask(*elements: int) -> int:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


def k3() -> Graph:
    return Graph(3, ((0, 1), (0, 2), (1, 2)))


def k4() -> Graph:
    # e0=01 e1=02 e2=03 e3=12 e4=13 e5=23
    return Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def k4_minus_edge() -> Graph:
    return Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)))


def prism() -> Graph:
    return Graph(
        6,
        ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)),
    )


def doubled_triangle() -> Graph:
    return Graph(3, ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)))


def doubled_path() -> Graph:
    return Graph(3, ((0, 1), (0, 1), (1, 2), (1, 2)))


def u24() -> UniformMatroid:
    return UniformMatroid(2, 4)


def fano() -> BinaryMatroid:
    return BinaryMatroid.from_matrix(FANO_ROWS)


def graphic_k4() -> GraphicMatroid:
    return GraphicMatroid(k4())
