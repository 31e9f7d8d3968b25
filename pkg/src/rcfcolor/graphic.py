"""Graphic and co-graphic matroids, sparsity counts and graph colorings.

Edges are matroid elements in file order. Cycle matroids take forests as
independent sets; co-graphic matroids are their duals, whose circuits are
the elementary edge cuts of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterator, Sequence

from .coloring import Coloring, enumerate_rcf_colorings, rainbow_circuit
from .core import (
    DualMatroid,
    InputError,
    Matroid,
    SizeGuardError,
)
from .reduction import covering_number
from .subsets import (
    bit,
    canonical_key,
    elements_of,
    iter_bits,
    mask_of,
    subsets_of_size,
)

__all__ = [
    "Graph",
    "GraphicMatroid",
    "graphic_matroid",
    "cographic_matroid",
    "elementary_cuts",
    "is_elementary_cut",
    "is_sparse_23",
    "is_tight_23",
    "HennebergTrace",
    "h0_decomposition",
    "pair_coloring",
    "k_tree_contraction_coloring",
    "gen_gqj",
    "gqj_circuit_family_masks",
    "gqj_spanning_tree_pair",
    "gqj_positions",
    "tight_graph_census",
]

SPARSE_LIMIT = 20
CUT_LIMIT = 20


@dataclass(frozen=True)
class Graph:
    """Multigraph on vertices {0, ..., vertex_count-1}; no self-loops."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InputError("edge endpoint outside the vertex range")
            if u == v:
                raise InputError("self-loops are not allowed")
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for u, w in self.edges if v in (u, w))

    def incident_mask(self, v: int) -> int:
        m = 0
        for i, (u, w) in enumerate(self.edges):
            if v in (u, w):
                m |= 1 << i
        return m

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def components(self, edge_mask: int | None = None) -> list[set[int]]:
        """Vertex components under the chosen edges (all by default)."""
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (u, v) in enumerate(self.edges):
            if edge_mask is not None and not edge_mask >> i & 1:
                continue
            parent[find(u)] = find(v)
        groups: dict[int, set[int]] = {}
        for v in range(self.vertex_count):
            groups.setdefault(find(v), set()).add(v)
        return list(groups.values())


class GraphicMatroid(Matroid):
    """Cycle matroid: a set of edges is independent iff it is a forest."""

    def __init__(self, graph: Graph):
        super().__init__(graph.edge_count)
        self.graph = graph
        self.known_binary = True

    def _rank_impl(self, mask: int) -> int:
        parent = list(range(self.graph.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for i in iter_bits(mask):
            u, v = self.graph.edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r

    def is_connected(self) -> bool:
        """Matroid connectivity: the graph is 2-connected on its used vertices."""
        g = self.graph
        if self.n == 0:
            return True
        used = {u for e in g.edges for u in e}
        active = [v for v in range(g.vertex_count) if v in used]
        comps = [c & used for c in map(set, g.components()) if c & used]
        if len(comps) != 1:
            return False
        if len(active) <= 2:
            return True
        for v in active:
            keep = mask_of(
                i for i, (a, b) in enumerate(g.edges) if v not in (a, b)
            )
            rest = used - {v}
            seen: set[int] = set()
            stack = [next(iter(rest))]
            adj: dict[int, set[int]] = {u: set() for u in rest}
            for i in iter_bits(keep):
                a, b = g.edges[i]
                adj[a].add(b)
                adj[b].add(a)
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                stack.extend(adj[x] - seen)
            if seen != rest:
                return False
        return True


def graphic_matroid(graph: Graph) -> GraphicMatroid:
    return GraphicMatroid(graph)


def cographic_matroid(graph: Graph, *, allow_bridges: bool = False) -> Matroid:
    """Dual of the cycle matroid; bridges would become loops."""
    m = graphic_matroid(graph)
    if not allow_bridges:
        full = m.full_rank
        for i in range(m.n):
            if m.rank(m.ground & ~(1 << i)) < full:
                raise InputError(
                    "bridge edge %d is a loop of the co-graphic matroid" % i
                )
    return m.dual()


def is_elementary_cut(graph: Graph, edge_mask: int) -> bool:
    """True iff removing the set splits exactly one component in two, and
    every member reconnects the same two parts."""
    if edge_mask == 0:
        return False
    before = len(graph.components())
    keep = ((1 << graph.edge_count) - 1) & ~edge_mask
    after_comps = graph.components(keep)
    if len(after_comps) != before + 1:
        return False
    comp_of = {}
    for idx, comp in enumerate(after_comps):
        for v in comp:
            comp_of[v] = idx
    sides = set()
    for i in iter_bits(edge_mask):
        u, v = graph.edges[i]
        a, b = comp_of[u], comp_of[v]
        if a == b:
            return False
        sides.add((min(a, b), max(a, b)))
    return len(sides) == 1


def elementary_cuts(graph: Graph) -> tuple[int, ...]:
    """All elementary edge cuts as edge masks, in canonical order.

    delta(A) is elementary iff both A and its complement induce connected
    subgraphs within one component.
    """
    if graph.vertex_count > CUT_LIMIT:
        raise SizeGuardError("cut enumeration is capped at 20 vertices")
    comps = [sorted(c) for c in graph.components()]
    cuts: set[int] = set()
    for comp in comps:
        k = len(comp)
        if k < 2:
            continue
        cmask = mask_of(comp)
        # enumerate splits with the last vertex pinned to one side
        for sub in range(1, 1 << (k - 1)):
            a = mask_of(comp[i] for i in iter_bits(sub))
            b = cmask & ~a
            if not a or not b:
                continue
            if not _vertices_connected(graph, a) or not _vertices_connected(
                graph, b
            ):
                continue
            cut = 0
            for i, (u, v) in enumerate(graph.edges):
                if (a >> u & 1 and b >> v & 1) or (a >> v & 1 and b >> u & 1):
                    cut |= 1 << i
            if cut:
                cuts.add(cut)
    return tuple(sorted(cuts, key=canonical_key))


def _vertices_connected(graph: Graph, vmask: int) -> bool:
    verts = elements_of(vmask)
    if len(verts) <= 1:
        return True
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in graph.edges:
        if vmask >> u & 1 and vmask >> v & 1:
            adj[u].append(v)
            adj[v].append(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def is_sparse_23(graph: Graph) -> tuple[bool, int | None]:
    """(2,3)-sparsity: every vertex set X spans at most 2|X| - 3 edges.

    Returns the first violating vertex set (canonical order) as a mask.
    """
    if not graph.is_simple():
        raise InputError("sparsity counts are for simple graphs")
    if graph.vertex_count < 2:
        raise InputError("sparsity needs at least two vertices")
    if graph.vertex_count > SPARSE_LIMIT:
        raise SizeGuardError("sparsity check is capped at 20 vertices")
    vmask_all = (1 << graph.vertex_count) - 1
    for size in range(2, graph.vertex_count + 1):
        for x in subsets_of_size(vmask_all, size):
            count = 0
            for u, v in graph.edges:
                if x >> u & 1 and x >> v & 1:
                    count += 1
            if count > 2 * size - 3:
                return (False, x)
    return (True, None)


def is_tight_23(graph: Graph) -> bool:
    """(2,3)-sparse with exactly 2|V| - 3 edges."""
    ok, _ = is_sparse_23(graph)
    return ok and graph.edge_count == 2 * graph.vertex_count - 3


@dataclass(frozen=True)
class HennebergTrace:
    """Vertex-addition history from a single base edge.

    steps[i] = (new_vertex, edge_id_a, edge_id_b) in construction order;
    the two ids are the edges that attach the vertex.
    """

    base_edge: int
    steps: tuple[tuple[int, int, int], ...]

    def replay(self, graph: Graph) -> bool:
        """Re-run the construction and confirm it rebuilds the graph."""
        u, v = graph.edges[self.base_edge]
        verts = {u, v}
        used = {self.base_edge}
        for w, ea, eb in self.steps:
            if w in verts:
                return False
            ends = set(graph.edges[ea]) | set(graph.edges[eb])
            if w not in graph.edges[ea] or w not in graph.edges[eb]:
                return False
            others = ends - {w}
            if len(others) != 2 or not others <= verts:
                return False
            verts.add(w)
            used.update((ea, eb))
        return len(verts) == graph.vertex_count and len(used) == graph.edge_count


def h0_decomposition(graph: Graph) -> HennebergTrace | None:
    """Strip degree-2 vertices down to a single edge, or None.

    Input must be simple with |E| = 2|V| - 3. Backtracks over which
    degree-2 vertex to remove; memoizes dead edge sets.
    """
    if not graph.is_simple():
        raise InputError("decomposition is for simple graphs")
    if graph.edge_count != 2 * graph.vertex_count - 3:
        raise InputError("decomposition needs |E| = 2|V| - 3")
    full = (1 << graph.edge_count) - 1
    dead: set[int] = set()
    steps: list[tuple[int, int, int]] = []

    def active_degrees(emask: int) -> dict[int, list[int]]:
        incident: dict[int, list[int]] = {}
        for i in iter_bits(emask):
            u, v = graph.edges[i]
            incident.setdefault(u, []).append(i)
            incident.setdefault(v, []).append(i)
        return incident

    base_edge: list[int] = []

    def rec(emask: int) -> bool:
        incident = active_degrees(emask)
        if emask.bit_count() == 1 and len(incident) == 2:
            base_edge.append(next(iter_bits(emask)))
            return True
        if emask in dead:
            return False
        for v in sorted(incident):
            ids = incident[v]
            if len(ids) != 2:
                continue
            rest = emask & ~(bit(ids[0]) | bit(ids[1]))
            if rec(rest):
                steps.append((v, ids[0], ids[1]))
                return True
        dead.add(emask)
        return False

    if graph.vertex_count < 2:
        return None
    if not rec(full):
        return None
    return HennebergTrace(base_edge=base_edge[0], steps=tuple(steps))


def pair_coloring(graph: Graph, *, method: str = "auto") -> Coloring | None:
    """RCF coloring of the cycle matroid with classes of at most 2 edges.

    For tight graphs the positive answer is read off the vertex-addition
    trace (base edge alone, each added vertex's two edges as a class); the
    exhaustive search settles everything else and is available directly
    via method="exhaustive".
    """
    if method not in ("auto", "exhaustive", "trace"):
        raise InputError("unknown method")
    if not graph.is_simple():
        raise InputError("pair colorings are for simple graphs")
    matroid = graphic_matroid(graph)
    if method in ("auto", "trace") and (
        graph.edge_count == 2 * graph.vertex_count - 3 and is_tight_23(graph)
    ):
        trace = h0_decomposition(graph)
        if trace is not None:
            classes = [bit(trace.base_edge)]
            classes += [bit(ea) | bit(eb) for _, ea, eb in trace.steps]
            coloring = Coloring(tuple(classes), graph.edge_count).canonical()
            if rainbow_circuit(matroid, coloring) is not None:
                raise InputError("trace produced a rainbow circuit")
            return coloring
        if method == "trace":
            return None
    if method == "trace":
        return None
    return next(enumerate_rcf_colorings(matroid, 2), None)


def k_tree_contraction_coloring(graph: Graph, k: int) -> Coloring | None:
    """Color by repeatedly contracting exactly-k parallel bundles.

    Requires a graph that decomposes into k disjoint spanning trees. A
    class is a bundle of k parallel edges of the current contraction; any
    surplus parallel edge would become a loop, so only multiplicity-k
    pairs are playable. None means the backtracking exhausted all orders.
    """
    if k < 1:
        raise InputError("k must be positive")
    m = graphic_matroid(graph)
    if graph.edge_count != k * (graph.vertex_count - 1):
        raise InputError("needs |E| = k(|V| - 1)")
    if covering_number(m) != k:
        raise InputError("needs covering number exactly k")
    classes: list[int] = []
    dead: set[tuple[int, ...]] = set()

    def rec(parent: tuple[int, ...], remaining: int) -> bool:
        if remaining == 0:
            return True
        key = parent
        if key in dead:
            return False
        roots = list(parent)

        def find(x: int) -> int:
            while roots[x] != x:
                roots[x] = roots[roots[x]]
                x = roots[x]
            return x

        groups: dict[tuple[int, int], list[int]] = {}
        for i in iter_bits(remaining):
            u, v = graph.edges[i]
            a, b = find(u), find(v)
            if a == b:
                dead.add(key)
                return False
            groups.setdefault((min(a, b), max(a, b)), []).append(i)
        for pair in sorted(groups):
            ids = groups[pair]
            if len(ids) != k:
                continue
            merged = list(parent)
            for x in range(len(merged)):
                r = x
                while merged[r] != r:
                    r = merged[r]
                merged[x] = r
            a, b = pair
            merged = [a if r == b else r for r in merged]
            cls = mask_of(ids)
            classes.append(cls)
            if rec(tuple(merged), remaining & ~cls):
                return True
            classes.pop()
        dead.add(key)
        return False

    if rec(tuple(range(graph.vertex_count)), m.ground):
        coloring = Coloring(tuple(classes), graph.edge_count).canonical()
        return coloring
    return None


def gen_gqj(q: int, j: int) -> Graph:
    """Chain of q complete bipartite 3x4 blocks plus j pendant vertices.

    Block i occupies vertices 7i..7i+6: three left vertices, then u, v, w,
    z. Consecutive blocks are joined by the two edges w_i v_{i+1} and
    z_i u_{i+1}; each pendant vertex hangs on both w and z of the last
    block. Edge order is block-major, then connectors, then pendants.
    """
    if q < 1 or not 1 <= j <= 7:
        raise InputError("needs q >= 1 and 1 <= j <= 7")
    edges: list[tuple[int, int]] = []
    for i in range(q):
        base = 7 * i
        left = [base, base + 1, base + 2]
        right = [base + 3, base + 4, base + 5, base + 6]
        for s in left:
            for t in right:
                edges.append((s, t))
    for i in range(q - 1):
        w_i = 7 * i + 5
        z_i = 7 * i + 6
        edges.append((w_i, 7 * (i + 1) + 4))
        edges.append((z_i, 7 * (i + 1) + 3))
    w_last = 7 * (q - 1) + 5
    z_last = 7 * (q - 1) + 6
    for p in range(j):
        pv = 7 * q + p
        edges.append((w_last, pv))
        edges.append((z_last, pv))
    return Graph(7 * q + j, tuple(edges))


def gqj_circuit_family_masks(q: int, j: int) -> tuple[Graph, tuple[int, ...]]:
    """The generated graph plus its star-and-connector cut family.

    Members are the vertex stars and, for each junction, the two-edge
    connector cut; all are elementary cuts, hence circuits of the
    co-graphic matroid.
    """
    graph = gen_gqj(q, j)
    members = [graph.incident_mask(v) for v in range(graph.vertex_count)]
    base = 12 * q
    for i in range(q - 1):
        members.append(bit(base + 2 * i) | bit(base + 2 * i + 1))
    members = sorted(set(members), key=canonical_key)
    for m in members:
        if not is_elementary_cut(graph, m):
            raise InputError("family member is not an elementary cut")
    return graph, tuple(members)


def gqj_spanning_tree_pair(q: int, j: int) -> tuple[int, int]:
    """Two disjoint spanning trees covering every edge of gen_gqj(q, j).

    Within each block the 12 edges split into two 6-edge trees; the two
    connector edges and the two pendant edges split one per tree.
    """
    graph = gen_gqj(q, j)
    index = {}
    for i, e in enumerate(graph.edges):
        index.setdefault(e, []).append(i)

    def take(u: int, v: int) -> int:
        return index[(min(u, v), max(u, v))].pop(0)

    t1 = t2 = 0
    for i in range(q):
        base = 7 * i
        a, b, c = base, base + 1, base + 2
        u, v, w, z = base + 3, base + 4, base + 5, base + 6
        for x, y in ((a, u), (a, v), (b, w), (b, z), (c, u), (c, w)):
            t1 |= bit(take(x, y))
        for x, y in ((a, w), (a, z), (b, u), (b, v), (c, v), (c, z)):
            t2 |= bit(take(x, y))
    for i in range(q - 1):
        w_i, z_i = 7 * i + 5, 7 * i + 6
        t1 |= bit(take(w_i, 7 * (i + 1) + 4))
        t2 |= bit(take(z_i, 7 * (i + 1) + 3))
    w_last = 7 * (q - 1) + 5
    z_last = 7 * (q - 1) + 6
    for p in range(j):
        pv = 7 * q + p
        t1 |= bit(take(w_last, pv))
        t2 |= bit(take(z_last, pv))
    return t1, t2


def gqj_positions(q: int, j: int) -> dict[int, tuple[float, float]]:
    """Plot layout: blocks left to right, left row above, pendants right."""
    pos: dict[int, tuple[float, float]] = {}
    for i in range(q):
        base = 7 * i
        x0 = 5.0 * i
        for s in range(3):
            pos[base + s] = (x0 + s + 0.5, 2.0)
        for t in range(4):
            pos[base + 3 + t] = (x0 + t, 0.0)
    for p in range(j):
        pos[7 * q + p] = (5.0 * (q - 1) + 4.5, 1.0 + 0.6 * p)
    return pos


def tight_graph_census(vertex_count: int) -> list[Graph]:
    """All (2,3)-tight simple graphs on the given vertices, up to isomorphism.

    Brute force over edge sets of the right size with a degree prefilter,
    then isomorphism dedup (degree-sequence fingerprint plus a full check).
    """
    import itertools

    import networkx as nx

    nv = vertex_count
    if nv < 2:
        raise InputError("census needs at least two vertices")
    if nv > 7:
        raise SizeGuardError("census is capped at 7 vertices")
    if nv == 2:
        return [Graph(2, ((0, 1),))]
    want = 2 * nv - 3
    all_edges = list(itertools.combinations(range(nv), 2))
    inside_masks = []
    vfull = (1 << nv) - 1
    for size in range(3, nv):
        for x in subsets_of_size(vfull, size):
            m = 0
            for i, (u, v) in enumerate(all_edges):
                if x >> u & 1 and x >> v & 1:
                    m |= 1 << i
            inside_masks.append((2 * size - 3, m))
    star = [0] * nv
    for i, (u, v) in enumerate(all_edges):
        star[u] |= 1 << i
        star[v] |= 1 << i
    reps: dict[tuple, list[tuple[Graph, "nx.Graph"]]] = {}
    out: list[Graph] = []
    for combo in itertools.combinations(range(len(all_edges)), want):
        gmask = 0
        for i in combo:
            gmask |= 1 << i
        if any((gmask & star[v]).bit_count() < 2 for v in range(nv)):
            continue
        if any((gmask & m).bit_count() > cap for cap, m in inside_masks):
            continue
        edges = tuple(all_edges[i] for i in combo)
        degseq = tuple(sorted((gmask & star[v]).bit_count() for v in range(nv)))
        ng = nx.Graph()
        ng.add_nodes_from(range(nv))
        ng.add_edges_from(edges)
        tri = tuple(sorted(nx.triangles(ng).values()))
        key = (degseq, tri)
        bucket = reps.setdefault(key, [])
        if any(nx.is_isomorphic(ng, other) for _, other in bucket):
            continue
        g = Graph(nv, edges)
        bucket.append((g, ng))
        out.append(g)
    return out
