"""Invariant suites behind `verify-all`.

Each check sweeps part of the catalog and returns a CheckResult; the
registry order is fixed so reports are byte-stable. Checks are pure and
may run on a thread pool, with results collected in registry order
regardless of completion order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .binary import find_u24_minor, is_binary
from .catalog import (
    CatalogEntry,
    MAX_N,
    MAX_R,
    binary_catalog,
    doubled_triangle,
    full_catalog,
    gf2_family,
    k_complete,
    prism_graph,
)
from .coloring import (
    Coloring,
    MONO_CUT,
    RAINBOW_CIRCUIT,
    enumerate_rcf_colorings,
    is_rainbow_circuit_free,
    is_standard,
    lemma_equiv_report,
    nonstandard_coloring,
    standard_coloring,
    theorem1_verdict,
)
from .core import (
    InputError,
    Matroid,
    UniformMatroid,
    same_matroid,
)
from .graphic import (
    Graph,
    cographic_matroid,
    elementary_cuts,
    gen_gqj,
    gqj_circuit_family_masks,
    gqj_spanning_tree_pair,
    graphic_matroid,
    h0_decomposition,
    is_sparse_23,
    k_tree_contraction_coloring,
    pair_coloring,
    tight_graph_census,
)
from .lsbo import BasisPair, lsbo_decide, lsbo_oracle, sbo_check
from .reduction import (
    CircuitFamily,
    coloring_to_partition,
    covering_number,
    covering_number_search,
    is_rank_preserving_reduction,
    is_reduction,
    lucas_flat,
    rank_bounds,
    restriction_contraction_sum,
    verify_family,
)
from .subsets import all_subsets, elements_of, set_partitions

__all__ = ["CheckResult", "CHECKS", "check_names", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    count: int
    detail: str


class VerifyContext:
    """Shared corpora, built eagerly so threaded checks do not race."""

    def __init__(self) -> None:
        self.full = full_catalog()
        self.binary = binary_catalog()
        self.gf2_caps = gf2_family(MAX_R, MAX_N)


def _fmt(mask: int) -> str:
    return " ".join("e%d" % e for e in elements_of(mask))


def _exactly_r_colorings(matroid: Matroid):
    for blocks in set_partitions(
        range(matroid.n), exact_blocks=matroid.full_rank
    ):
        yield Coloring(blocks, matroid.n)


def _nonbinary_fixtures(ctx: VerifyContext) -> list[CatalogEntry]:
    return [e for e in ctx.full if e.binary is False]


# ---------------------------------------------------------------- core


def _check_circuit_cut_intersection(ctx: VerifyContext) -> CheckResult:
    """No circuit meets a cut in exactly one element."""
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.n > 8:
            continue
        cuts = m.cocircuits()
        for c in m.circuits():
            for d in cuts:
                count += 1
                if (c & d).bit_count() == 1:
                    return CheckResult(
                        "core.circuit_cut_intersection",
                        False,
                        count,
                        "%s: |%s ^ %s| = 1" % (entry.name, _fmt(c), _fmt(d)),
                    )
    return CheckResult(
        "core.circuit_cut_intersection", True, count, "circuit/cut pairs"
    )


def _check_cuts_hit_all_bases(ctx: VerifyContext) -> CheckResult:
    """Cocircuits equal the minimal sets meeting every basis.

    Recomputed from the basis list, independent of the dual-rank route.
    """
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.n > 7:
            continue
        bases = list(m.bases())
        minimal: list[int] = []
        for x in all_subsets(m.ground):
            if x == 0 or any(x & b == 0 for b in bases):
                continue
            if any(x & t == t for t in minimal):
                continue
            minimal.append(x)
        if tuple(minimal) != m.cocircuits():
            return CheckResult(
                "core.cuts_hit_all_bases",
                False,
                count,
                "%s: cocircuit list mismatch" % entry.name,
            )
        count += 1
    return CheckResult("core.cuts_hit_all_bases", True, count, "matroids")


def _check_rank_axioms(ctx: VerifyContext) -> CheckResult:
    """Unit monotonicity and local submodularity of rank.

    r(X) <= r(X+e) <= r(X)+1 and r(X+e)+r(X+f) >= r(X+e+f)+r(X); the
    local form implies full submodularity.
    """
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.n > 8:
            continue
        for x in all_subsets(m.ground):
            rx = m.rank(x)
            out = [e for e in range(m.n) if not x >> e & 1]
            for i, e in enumerate(out):
                re = m.rank(x | 1 << e)
                if not rx <= re <= rx + 1:
                    return CheckResult(
                        "core.rank_axioms", False, count,
                        "%s: unit step fails at %s + e%d" % (entry.name, _fmt(x), e),
                    )
                for f in out[i + 1:]:
                    count += 1
                    rf = m.rank(x | 1 << f)
                    ref = m.rank(x | 1 << e | 1 << f)
                    if re + rf < ref + rx:
                        return CheckResult(
                            "core.rank_axioms", False, count,
                            "%s: submodularity fails at %s, e%d, e%d"
                            % (entry.name, _fmt(x), e, f),
                        )
    return CheckResult("core.rank_axioms", True, count, "local inequalities")


def _check_minor_duality(ctx: VerifyContext) -> CheckResult:
    """dual(M|A) matches (dual M)/(S - A) on independence tables."""
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.n > 6 and entry.name != "fano":
            continue
        dual = m.dual()
        for a in all_subsets(m.ground):
            left = m.restrict(a).dual()
            right = dual.contract(m.ground & ~a)
            count += 1
            if not same_matroid(left, right):
                return CheckResult(
                    "core.minor_duality", False, count,
                    "%s: mismatch at A = %s" % (entry.name, _fmt(a)),
                )
    return CheckResult("core.minor_duality", True, count, "restrictions")


def _check_closure_props(ctx: VerifyContext) -> CheckResult:
    """Closure is extensive, idempotent, and rank-preserving."""
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.n > 7:
            continue
        for x in all_subsets(m.ground):
            cl = m.closure(x)
            count += 1
            if cl & x != x or m.closure(cl) != cl or m.rank(cl) != m.rank(x):
                return CheckResult(
                    "core.closure_props", False, count,
                    "%s: closure misbehaves at %s" % (entry.name, _fmt(x)),
                )
    return CheckResult("core.closure_props", True, count, "subsets")


# -------------------------------------------------------------- binary


def _check_nullspace_circuits(ctx: VerifyContext) -> CheckResult:
    """Kernel-support circuits agree with oracle enumeration at the caps."""
    count = 0
    for entry in ctx.gf2_caps:
        m = entry.matroid
        count += 1
        if m.circuits_nullspace() != m.circuits():
            return CheckResult(
                "binary.nullspace_circuits", False, count,
                "%s: circuit lists differ" % entry.name,
            )
    return CheckResult("binary.nullspace_circuits", True, count, "matrices")


def _check_generated_binary(ctx: VerifyContext) -> CheckResult:
    """Every GF(2)-matrix matroid passes the minor-search binarity test."""
    count = 0
    for entry in ctx.binary:
        m = entry.matroid
        count += 1
        if not is_binary(m):
            return CheckResult(
                "binary.generated_binary", False, count,
                "%s: minor search found a witness" % entry.name,
            )
    return CheckResult("binary.generated_binary", True, count, "matroids")


def _check_nonbinary_witnesses(ctx: VerifyContext) -> CheckResult:
    """Witness minors really are the rank-2 four-point line."""
    u24 = UniformMatroid(2, 4)
    count = 0
    for entry in _nonbinary_fixtures(ctx):
        m = entry.matroid
        witness = find_u24_minor(m)
        count += 1
        if witness is None:
            return CheckResult(
                "binary.nonbinary_witnesses", False, count,
                "%s: no witness found" % entry.name,
            )
        contracted = m.contract(witness.flat)
        local = 0
        for i, e in enumerate(contracted.parent_elements):
            if witness.elements >> e & 1:
                local |= 1 << i
        minor = contracted.restrict(local)
        if not same_matroid(minor, u24):
            return CheckResult(
                "binary.nonbinary_witnesses", False, count,
                "%s: witness minor is not the four-point line" % entry.name,
            )
    return CheckResult("binary.nonbinary_witnesses", True, count, "fixtures")


def _check_dual_binary(ctx: VerifyContext) -> CheckResult:
    """Binarity survives dualization."""
    count = 0
    for entry in ctx.binary:
        count += 1
        if not is_binary(entry.matroid.dual()):
            return CheckResult(
                "binary.dual_binary", False, count,
                "%s: dual failed the minor search" % entry.name,
            )
    return CheckResult("binary.dual_binary", True, count, "duals")


# ------------------------------------------------------------ coloring


def _check_standard_rcf(ctx: VerifyContext) -> CheckResult:
    """Standard colorings are rainbow circuit-free and certified."""
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.has_loops():
            continue
        coloring, _ = standard_coloring(m)
        ok, witness = is_rainbow_circuit_free(m, coloring)
        count += 1
        if not ok or coloring.q != m.full_rank or is_standard(m, coloring) is None:
            return CheckResult(
                "coloring.standard_rcf", False, count,
                "%s: standard coloring broke (witness %s)"
                % (entry.name, _fmt(witness or 0)),
            )
    return CheckResult("coloring.standard_rcf", True, count, "matroids")


def _check_lemma_equivalence(ctx: VerifyContext) -> CheckResult:
    """The three ordering conditions agree on every exactly-r coloring."""
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.n > 6 or m.has_loops():
            continue
        for coloring in _exactly_r_colorings(m):
            a, b, c = lemma_equiv_report(m, coloring)
            count += 1
            if not a == b == c:
                return CheckResult(
                    "coloring.lemma_equivalence", False, count,
                    "%s: (%s, %s, %s) on %s"
                    % (entry.name, a, b, c, coloring.assignment()),
                )
    return CheckResult("coloring.lemma_equivalence", True, count, "colorings")


def _check_theorem1(ctx: VerifyContext) -> CheckResult:
    """Every exactly-r coloring of a binary matroid yields a certificate."""
    count = 0
    for entry in ctx.binary:
        m = entry.matroid
        if m.n > 7:
            continue
        circuits = set(m.circuits())
        cuts = set(m.cocircuits())
        for coloring in _exactly_r_colorings(m):
            verdict = theorem1_verdict(m, coloring)
            count += 1
            if verdict.kind == RAINBOW_CIRCUIT:
                seen = {coloring.class_of(e) for e in elements_of(verdict.subset)}
                valid = (
                    verdict.subset in circuits
                    and len(seen) == verdict.subset.bit_count()
                )
            elif verdict.kind == MONO_CUT:
                cls = coloring.classes[verdict.class_index]
                valid = verdict.subset in cuts and verdict.subset & ~cls == 0
            else:
                valid = False
            if not valid:
                return CheckResult(
                    "coloring.theorem1", False, count,
                    "%s: invalid %s certificate" % (entry.name, verdict.kind),
                )
    return CheckResult("coloring.theorem1", True, count, "colorings")


def _check_rcf_standard(ctx: VerifyContext) -> CheckResult:
    """RCF exactly-r colorings of binary matroids are all standard."""
    count = 0
    for entry in ctx.binary:
        m = entry.matroid
        if m.n > 7:
            continue
        for coloring in enumerate_rcf_colorings(
            m, m.n, exact_colors=m.full_rank
        ):
            count += 1
            if is_standard(m, coloring) is None:
                return CheckResult(
                    "coloring.rcf_standard", False, count,
                    "%s: RCF coloring %s is not standard"
                    % (entry.name, coloring.assignment()),
                )
    return CheckResult("coloring.rcf_standard", True, count, "RCF colorings")


def _check_nonstandard_construction(ctx: VerifyContext) -> CheckResult:
    """The non-binary construction yields RCF, exactly-r, non-standard."""
    count = 0
    for entry in _nonbinary_fixtures(ctx):
        m = entry.matroid
        coloring = nonstandard_coloring(m)
        ok, _ = is_rainbow_circuit_free(m, coloring)
        count += 1
        if not ok or coloring.q != m.full_rank or is_standard(m, coloring) is not None:
            return CheckResult(
                "coloring.nonstandard_construction", False, count,
                "%s: construction failed on %s"
                % (entry.name, coloring.assignment()),
            )
    return CheckResult(
        "coloring.nonstandard_construction", True, count, "fixtures"
    )


# ----------------------------------------------------------- reduction


def _check_coloring_bridge(ctx: VerifyContext) -> CheckResult:
    """RCF colorings and partition-matroid reductions coincide."""
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.n > 6 or m.has_loops():
            continue
        for blocks in set_partitions(range(m.n)):
            coloring = Coloring(blocks, m.n)
            rcf, _ = is_rainbow_circuit_free(m, coloring)
            reduced = is_reduction(coloring_to_partition(coloring), m)
            count += 1
            if rcf != reduced:
                return CheckResult(
                    "reduction.coloring_bridge", False, count,
                    "%s: RCF %s vs reduction %s on %s"
                    % (entry.name, rcf, reduced, coloring.assignment()),
                )
    return CheckResult("reduction.coloring_bridge", True, count, "partitions")


def _check_covering_agreement(ctx: VerifyContext) -> CheckResult:
    """Max-ratio covering formula equals the exact cover search."""
    count = 0
    for entry in ctx.full:
        m = entry.matroid
        if m.n > 10 or m.has_loops():
            continue
        count += 1
        if covering_number(m) != covering_number_search(m):
            return CheckResult(
                "reduction.covering_agreement", False, count,
                "%s: formula and search disagree" % entry.name,
            )
    return CheckResult("reduction.covering_agreement", True, count, "matroids")


def _check_norpbin_k4(ctx: VerifyContext) -> CheckResult:
    """Rank-preserving RCF colorings of co-graphic K4 need a class >= 3."""
    m = cographic_matroid(k_complete(4))
    count = 0
    for coloring in enumerate_rcf_colorings(m, m.n, exact_colors=3):
        count += 1
        if coloring.max_class_size() < 3:
            return CheckResult(
                "reduction.norpbin_k4", False, count,
                "small-class coloring %s slipped through" % (coloring.assignment(),),
            )
    if count == 0:
        return CheckResult(
            "reduction.norpbin_k4", False, 0, "no rank-preserving RCF coloring at all"
        )
    return CheckResult("reduction.norpbin_k4", True, count, "colorings")


def _check_gqj_rank_theorem(ctx: VerifyContext) -> CheckResult:
    """Color counts of small-class RCF colorings respect the family bounds."""
    graph, members = gqj_circuit_family_masks(1, 1)
    m = cographic_matroid(graph)
    family = CircuitFamily.of(m, members)
    if not verify_family(m, family, 4):
        return CheckResult(
            "reduction.gqj_rank_theorem", False, 0, "family condition failed"
        )
    lower, upper = rank_bounds(m, family, 4)
    if (lower, upper) != (Fraction(4), 6):
        return CheckResult(
            "reduction.gqj_rank_theorem", False, 0,
            "bounds %s, %s" % (lower, upper),
        )
    count = 0
    for coloring in enumerate_rcf_colorings(m, 3):
        count += 1
        if not 4 <= coloring.q <= 6:
            return CheckResult(
                "reduction.gqj_rank_theorem", False, count,
                "coloring with %d colors escapes [4, 6]" % coloring.q,
            )
    return CheckResult("reduction.gqj_rank_theorem", True, count, "colorings")


def _check_lucas(ctx: VerifyContext) -> CheckResult:
    """The flat found by the decomposition satisfies both reductions."""
    cases = []
    k3 = graphic_matroid(k_complete(3))
    c3, _ = standard_coloring(k3)
    cases.append((k3, coloring_to_partition(c3)))
    k4 = graphic_matroid(k_complete(4))
    c4, _ = standard_coloring(k4)
    cases.append((k4, coloring_to_partition(c4)))
    fano = next(e.matroid for e in ctx.full if e.name == "fano")
    cf, _ = standard_coloring(fano)
    cases.append((fano, coloring_to_partition(cf)))
    count = 0
    for host, reduced in cases:
        flat = lucas_flat(reduced, host)
        glued = restriction_contraction_sum(host, flat)
        count += 1
        if not (
            host.is_closed(flat)
            and is_rank_preserving_reduction(reduced, glued)
            and is_rank_preserving_reduction(glued, host)
        ):
            return CheckResult(
                "reduction.lucas", False, count,
                "flat %s fails the factoring" % _fmt(flat),
            )
    return CheckResult("reduction.lucas", True, count, "decompositions")


# ------------------------------------------------------------- graphic


def _graph_fixtures() -> list[tuple[str, Graph]]:
    return [
        ("k3", k_complete(3)),
        ("k4", k_complete(4)),
        ("prism", prism_graph()),
        ("doubled_k3", doubled_triangle()),
        ("gqj_1_1", gen_gqj(1, 1)),
    ]


def _check_elementary_cuts_dual(ctx: VerifyContext) -> CheckResult:
    """Co-graphic circuits are exactly the elementary cuts."""
    count = 0
    for name, graph in _graph_fixtures():
        cuts = sorted(elementary_cuts(graph))
        circuits = sorted(cographic_matroid(graph).circuits())
        count += 1
        if cuts != circuits:
            return CheckResult(
                "graphic.elementary_cuts_dual", False, count,
                "%s: cut lists differ" % name,
            )
    return CheckResult("graphic.elementary_cuts_dual", True, count, "graphs")


def _check_sparse_pair(ctx: VerifyContext) -> CheckResult:
    """A pair-coloring forces (2,3)-sparsity on simple graphs."""
    graphs = [
        ("k3", k_complete(3)),
        ("k4", k_complete(4)),
        ("prism", prism_graph()),
    ]
    for nv in (4, 5):
        for i, g in enumerate(tight_graph_census(nv)):
            graphs.append(("tight_%d_%d" % (nv, i), g))
    count = 0
    for name, graph in graphs:
        coloring = pair_coloring(graph, method="exhaustive")
        sparse, _ = is_sparse_23(graph)
        count += 1
        if coloring is not None and not sparse:
            return CheckResult(
                "graphic.sparse_pair", False, count,
                "%s: pair-colorable but not sparse" % name,
            )
    return CheckResult("graphic.sparse_pair", True, count, "graphs")


def _check_ho_equivalence(ctx: VerifyContext) -> CheckResult:
    """Degree-2 buildability matches pair-colorability on tight graphs."""
    count = 0
    for nv in range(3, 7):
        for graph in tight_graph_census(nv):
            trace = h0_decomposition(graph)
            exhaustive = pair_coloring(graph, method="exhaustive")
            count += 1
            if (trace is None) != (exhaustive is None):
                return CheckResult(
                    "graphic.ho_equivalence", False, count,
                    "census graph on %d vertices splits the equivalence" % nv,
                )
            if trace is not None:
                derived = pair_coloring(graph, method="trace")
                m = graphic_matroid(graph)
                ok, _ = is_rainbow_circuit_free(m, derived)
                if not ok or derived.max_class_size() > 2:
                    return CheckResult(
                        "graphic.ho_equivalence", False, count,
                        "trace coloring invalid on %d vertices" % nv,
                    )
    return CheckResult("graphic.ho_equivalence", True, count, "tight graphs")


def _check_gqj_shape(ctx: VerifyContext) -> CheckResult:
    """Generated chain graphs match the advertised counts and bounds."""
    expected = {
        (1, 1): (8, 14, 7, 8, Fraction(4), 6),
        (2, 1): (15, 28, 14, 16, Fraction(8), 12),
    }
    count = 0
    for (q, j), (nv, ne, rank, fam_size, lower, upper) in expected.items():
        graph, members = gqj_circuit_family_masks(q, j)
        m = cographic_matroid(graph)
        count += 1
        if (
            graph.vertex_count != nv
            or graph.edge_count != ne
            or not graph.is_simple()
            or m.full_rank != rank
            or len(members) != fam_size
        ):
            return CheckResult(
                "graphic.gqj_shape", False, count,
                "q=%d j=%d: wrong shape" % (q, j),
            )
        family = CircuitFamily.of(m, members)
        if not verify_family(m, family, 4) or rank_bounds(m, family, 4) != (lower, upper):
            return CheckResult(
                "graphic.gqj_shape", False, count,
                "q=%d j=%d: family or bounds failed" % (q, j),
            )
        t1, t2 = gqj_spanning_tree_pair(q, j)
        gm = graphic_matroid(graph)
        two_cover = (
            t1 & t2 == 0
            and (t1 | t2) == gm.ground
            and gm.indep(t1)
            and gm.indep(t2)
            and t1.bit_count() == nv - 1
        )
        if not two_cover or not m.is_connected():
            return CheckResult(
                "graphic.gqj_shape", False, count,
                "q=%d j=%d: covering certificate failed" % (q, j),
            )
        if graph.edge_count <= 16 and covering_number(m) != 2:
            return CheckResult(
                "graphic.gqj_shape", False, count,
                "q=%d j=%d: covering number is not 2" % (q, j),
            )
    return CheckResult("graphic.gqj_shape", True, count, "parameter pairs")


def _check_k_tree(ctx: VerifyContext) -> CheckResult:
    """Contraction colorings exist exactly when bundles tile the graph."""
    doubled_k2 = Graph(2, ((0, 1), (0, 1)))
    doubled_path = Graph(3, ((0, 1), (0, 1), (1, 2), (1, 2)))
    cases = [
        ("doubled_k2", doubled_k2, 2, True),
        ("doubled_path", doubled_path, 2, True),
        ("k4", k_complete(4), 2, False),
    ]
    count = 0
    for name, graph, k, expect in cases:
        coloring = k_tree_contraction_coloring(graph, k)
        count += 1
        if (coloring is not None) != expect:
            return CheckResult(
                "graphic.k_tree", False, count,
                "%s: presence mismatch" % name,
            )
        if coloring is not None:
            m = graphic_matroid(graph)
            ok, _ = is_rainbow_circuit_free(m, coloring)
            if not ok or any(c.bit_count() != k for c in coloring.classes):
                return CheckResult(
                    "graphic.k_tree", False, count,
                    "%s: coloring malformed" % name,
                )
    return CheckResult("graphic.k_tree", True, count, "graphs")


# ---------------------------------------------------------------- lsbo


def _check_lsbo_agreement(ctx: VerifyContext) -> CheckResult:
    """Structured decision and brute-force oracle agree on basis pairs."""
    count = 0
    for entry in ctx.binary:
        m = entry.matroid
        bases = list(m.bases())
        for i in range(len(bases)):
            for j in range(i, len(bases)):
                b1, b2 = bases[i], bases[j]
                if (b1 & ~b2).bit_count() > 5:
                    continue
                pair = BasisPair(m, b1, b2)
                decided = lsbo_decide(pair)
                oracle = lsbo_oracle(pair)
                count += 1
                if (decided is None) != (oracle is None):
                    return CheckResult(
                        "lsbo.agreement", False, count,
                        "%s: decide/oracle split on %s vs %s"
                        % (entry.name, _fmt(b1), _fmt(b2)),
                    )
                if decided is not None:
                    ok, failing = sbo_check(pair, decided)
                    inter = b1 & b2
                    xs = sorted(x for x, _ in decided.pairs)
                    ys = sorted(y for _, y in decided.pairs)
                    shaped = (
                        xs == list(elements_of(b1))
                        and ys == list(elements_of(b2))
                        and all(
                            y == x
                            for x, y in decided.pairs
                            if inter >> x & 1
                        )
                    )
                    if not ok or not shaped:
                        return CheckResult(
                            "lsbo.agreement", False, count,
                            "%s: returned bijection fails (X = %s)"
                            % (entry.name, _fmt(failing or 0)),
                        )
    return CheckResult("lsbo.agreement", True, count, "basis pairs")


def _check_lsbo_simple_disjoint(ctx: VerifyContext) -> CheckResult:
    """Disjoint bases of a simple binary matroid never admit a bijection."""
    count = 0
    for entry in ctx.binary:
        m = entry.matroid
        if m.has_loops() or any(c.bit_count() < 3 for c in m.circuits()):
            continue
        bases = list(m.bases())
        for i in range(len(bases)):
            for j in range(i + 1, len(bases)):
                if bases[i] & bases[j]:
                    continue
                pair = BasisPair(m, bases[i], bases[j])
                count += 1
                if lsbo_decide(pair) is not None:
                    return CheckResult(
                        "lsbo.simple_disjoint", False, count,
                        "%s: bijection on disjoint bases %s / %s"
                        % (entry.name, _fmt(bases[i]), _fmt(bases[j])),
                    )
    return CheckResult("lsbo.simple_disjoint", True, count, "disjoint pairs")


CHECKS: tuple[tuple[str, Callable[[VerifyContext], CheckResult]], ...] = (
    ("core.circuit_cut_intersection", _check_circuit_cut_intersection),
    ("core.cuts_hit_all_bases", _check_cuts_hit_all_bases),
    ("core.rank_axioms", _check_rank_axioms),
    ("core.minor_duality", _check_minor_duality),
    ("core.closure_props", _check_closure_props),
    ("binary.nullspace_circuits", _check_nullspace_circuits),
    ("binary.generated_binary", _check_generated_binary),
    ("binary.nonbinary_witnesses", _check_nonbinary_witnesses),
    ("binary.dual_binary", _check_dual_binary),
    ("coloring.standard_rcf", _check_standard_rcf),
    ("coloring.lemma_equivalence", _check_lemma_equivalence),
    ("coloring.theorem1", _check_theorem1),
    ("coloring.rcf_standard", _check_rcf_standard),
    ("coloring.nonstandard_construction", _check_nonstandard_construction),
    ("reduction.coloring_bridge", _check_coloring_bridge),
    ("reduction.covering_agreement", _check_covering_agreement),
    ("reduction.norpbin_k4", _check_norpbin_k4),
    ("reduction.gqj_rank_theorem", _check_gqj_rank_theorem),
    ("reduction.lucas", _check_lucas),
    ("graphic.elementary_cuts_dual", _check_elementary_cuts_dual),
    ("graphic.sparse_pair", _check_sparse_pair),
    ("graphic.ho_equivalence", _check_ho_equivalence),
    ("graphic.gqj_shape", _check_gqj_shape),
    ("graphic.k_tree", _check_k_tree),
    ("lsbo.agreement", _check_lsbo_agreement),
    ("lsbo.simple_disjoint", _check_lsbo_simple_disjoint),
)


def check_names() -> list[str]:
    return [name for name, _ in CHECKS]


def _run_one(fn: Callable[[VerifyContext], CheckResult], name: str, ctx: VerifyContext) -> CheckResult:
    try:
        return fn(ctx)
    except Exception as exc:  # a crashed check is a failed check
        return CheckResult(name, False, 0, "error: %s" % exc)


def run_checks(
    *, threads: int = 1, names: Sequence[str] | None = None
) -> list[CheckResult]:
    """Run the registered checks, in registry order, optionally threaded."""
    if names is not None:
        known = set(check_names())
        bad = [n for n in names if n not in known]
        if bad:
            raise InputError("unknown check name %r" % bad[0])
    selected = [
        (name, fn) for name, fn in CHECKS if names is None or name in names
    ]
    ctx = VerifyContext()
    if threads <= 1:
        return [_run_one(fn, name, ctx) for name, fn in selected]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_one, fn, name, ctx) for name, fn in selected]
        return [f.result() for f in futures]
