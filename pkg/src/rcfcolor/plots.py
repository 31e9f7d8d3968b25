"""Figure rendering for the CLI report path.

matplotlib is imported lazily with the Agg backend so figure-free runs
never touch a display. All layouts are deterministic.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from .coloring import Coloring
from .graphic import Graph
from .subsets import elements_of

__all__ = [
    "circular_positions",
    "save_graph_figure",
    "save_check_summary",
    "save_class_sizes",
]

_OK_COLOR = "#2f9e44"
_FAIL_COLOR = "#c92a2a"
_EDGE_COLOR = "#555555"
_HIGHLIGHT = "#e03131"


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def circular_positions(graph: Graph) -> dict[int, tuple[float, float]]:
    n = graph.vertex_count
    return {
        v: (math.cos(2 * math.pi * v / n), math.sin(2 * math.pi * v / n))
        for v in range(n)
    }


def _class_palette(count: int) -> list[str]:
    import matplotlib.cm as cm

    name = "tab10" if count <= 10 else "tab20"
    cmap = cm.get_cmap(name)
    return [cmap(i % cmap.N) for i in range(count)]


def save_graph_figure(
    graph: Graph,
    path: str,
    *,
    positions: Mapping[int, tuple[float, float]] | None = None,
    coloring: Coloring | None = None,
    highlight_edges: int = 0,
    highlight_vertices: Sequence[int] = (),
    title: str | None = None,
) -> None:
    """Draw the graph; parallel edges curve apart, classes share colors."""
    plt = _pyplot()
    from matplotlib.patches import FancyArrowPatch

    pos = dict(positions) if positions is not None else circular_positions(graph)
    palette = _class_palette(coloring.q) if coloring is not None else []

    fig, ax = plt.subplots(figsize=(6.4, 5.2))
    # spread parallel copies of the same vertex pair over distinct arcs
    seen: dict[tuple[int, int], int] = {}
    multiplicity: dict[tuple[int, int], int] = {}
    for u, v in graph.edges:
        multiplicity[(u, v)] = multiplicity.get((u, v), 0) + 1
    label_edges = graph.edge_count <= 30
    for i, (u, v) in enumerate(graph.edges):
        k = seen.get((u, v), 0)
        seen[(u, v)] = k + 1
        total = multiplicity[(u, v)]
        rad = 0.0 if total == 1 else -0.3 + 0.6 * k / (total - 1)
        if highlight_edges >> i & 1:
            color, width = _HIGHLIGHT, 2.6
        elif coloring is not None:
            color, width = palette[coloring.class_of(i)], 2.0
        else:
            color, width = _EDGE_COLOR, 1.5
        p0, p1 = pos[u], pos[v]
        ax.add_patch(
            FancyArrowPatch(
                p0,
                p1,
                connectionstyle="arc3,rad=%f" % rad,
                arrowstyle="-",
                color=color,
                linewidth=width,
                zorder=1,
            )
        )
        if label_edges:
            mx = (p0[0] + p1[0]) / 2
            my = (p0[1] + p1[1]) / 2
            dx, dy = p1[0] - p0[0], p1[1] - p0[1]
            ax.text(
                mx - dy * rad / 2,
                my + dx * rad / 2,
                "e%d" % i,
                fontsize=7,
                ha="center",
                va="center",
                zorder=3,
            )
    marked = set(highlight_vertices)
    for v, (x, y) in pos.items():
        face = _HIGHLIGHT if v in marked else "#1c7ed6"
        ax.scatter([x], [y], s=220, color=face, zorder=2)
        ax.text(
            x, y, str(v), fontsize=8, ha="center", va="center",
            color="white", zorder=4,
        )
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def save_check_summary(results, path: str) -> None:
    """Horizontal pass/fail bars, one per invariant check."""
    plt = _pyplot()
    names = [r.name for r in results]
    counts = [max(r.count, 1) for r in results]
    colors = [_OK_COLOR if r.ok else _FAIL_COLOR for r in results]
    fig, ax = plt.subplots(figsize=(8.0, 0.34 * len(results) + 1.2))
    ypos = range(len(results) - 1, -1, -1)
    ax.barh(list(ypos), counts, color=colors, log=True)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xlabel("objects checked (log scale)")
    passed = sum(1 for r in results if r.ok)
    ax.set_title("invariant checks: %d/%d passed" % (passed, len(results)))
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def save_class_sizes(coloring: Coloring, path: str, title: str | None = None) -> None:
    """Bar chart of color-class sizes for non-graph inputs."""
    plt = _pyplot()
    sizes = [cls.bit_count() for cls in coloring.classes]
    palette = _class_palette(coloring.q)
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar(range(len(sizes)), sizes, color=palette)
    ax.set_xticks(range(len(sizes)))
    ax.set_xticklabels(
        ["\n".join("e%d" % e for e in elements_of(c)) for c in coloring.classes],
        fontsize=7,
    )
    ax.set_ylabel("class size")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
