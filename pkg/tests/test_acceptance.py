"""Acceptance gate: the eight desk-scale verification sweeps.

Each criterion is one test that re-derives its own evidence (no reuse of
the library's bundled invariant runner except where the criterion is
about that runner) and prints a single pass/fail line.
"""

import time
from fractions import Fraction
from itertools import permutations

from rcfcolor import (
    BasisPair,
    CircuitFamily,
    Coloring,
    ExchangeBijection,
    GraphicMatroid,
    UniformMatroid,
    binary_catalog,
    cographic_matroid,
    coloring_to_partition,
    covering_number,
    covering_number_search,
    direct_sum,
    enumerate_rcf_colorings,
    free_matroid,
    full_catalog,
    gen_gqj,
    gqj_circuit_family_masks,
    h0_decomposition,
    is_rainbow_circuit_free,
    is_rank_preserving_reduction,
    is_sparse_23,
    is_standard,
    is_tight_23,
    lemma_equiv_report,
    lsbo_decide,
    lsbo_oracle,
    nonstandard_coloring,
    pair_coloring,
    rank_bounds,
    sbo_check,
    standard_coloring,
    theorem1_verdict,
    tight_graph_census,
    verify_family,
)
from rcfcolor.cli import main as cli_main
from rcfcolor.graphic import Graph
from rcfcolor.subsets import elements_of, iter_bits, set_partitions


def report(num, ok, detail):
    print("criterion %d: %s (%s)" % (num, "PASS" if ok else "FAIL", detail))
    assert ok, "criterion %d failed: %s" % (num, detail)


def k4_graph():
    return Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def exact_r_colorings(matroid):
    r = matroid.full_rank
    for blocks in set_partitions(range(matroid.n), exact_blocks=r):
        yield Coloring(blocks, matroid.n)


def test_criterion_1_theorem1_certificates():
    """Every exactly-r coloring of every binary entry gets a valid verdict."""
    start = time.perf_counter()
    faults = 0
    colorings = 0
    for entry in binary_catalog():
        m = entry.matroid
        circuits = set(m.circuits())
        cuts = set(m.cocircuits())
        for coloring in exact_r_colorings(m):
            colorings += 1
            v = theorem1_verdict(m, coloring)
            if v.kind == "rainbow-circuit":
                distinct = {coloring.class_of(e) for e in iter_bits(v.subset)}
                good = (
                    v.subset in circuits
                    and len(distinct) == bin(v.subset).count("1")
                )
            elif v.kind == "mono-cut":
                good = (
                    v.subset in cuts
                    and v.subset & ~coloring.classes[v.class_index] == 0
                )
            else:
                good = False
            if not good:
                faults += 1
    elapsed = time.perf_counter() - start
    report(
        1,
        faults == 0 and elapsed < 120,
        "%d colorings, %d faults, %.1fs" % (colorings, faults, elapsed),
    )


def test_criterion_2_standardness_both_directions():
    start = time.perf_counter()
    not_standard = 0
    rcf_seen = 0
    for entry in binary_catalog():
        m = entry.matroid
        for coloring in exact_r_colorings(m):
            if not is_rainbow_circuit_free(m, coloring)[0]:
                continue
            rcf_seen += 1
            if is_standard(m, coloring) is None:
                not_standard += 1
    construction_ok = True
    for m in (
        UniformMatroid(2, 4),
        UniformMatroid(2, 5),
        direct_sum(UniformMatroid(2, 4), free_matroid(1)),
    ):
        c = nonstandard_coloring(m)
        construction_ok = construction_ok and (
            c.q == m.full_rank
            and is_rainbow_circuit_free(m, c)[0]
            and is_standard(m, c) is None
        )
    elapsed = time.perf_counter() - start
    report(
        2,
        not_standard == 0 and construction_ok and elapsed < 60,
        "%d RCF colorings all standard, 3 nonstandard builds, %.1fs"
        % (rcf_seen, elapsed),
    )


def test_criterion_3_lemma_equivalence():
    start = time.perf_counter()
    disagreements = 0
    checked = 0
    for entry in full_catalog():
        m = entry.matroid
        if m.n > 6:
            continue
        for coloring in exact_r_colorings(m):
            checked += 1
            a, b, c = lemma_equiv_report(m, coloring)
            if not (a == b == c):
                disagreements += 1
    elapsed = time.perf_counter() - start
    report(
        3,
        disagreements == 0 and elapsed < 60,
        "%d colorings, %d disagreements, %.1fs" % (checked, disagreements, elapsed),
    )


def test_criterion_4_lsbo():
    start = time.perf_counter()
    m = GraphicMatroid(k4_graph())
    b1 = 0b101001  # trees 12,23,34 -> e0,e3,e5
    b2 = 0b010110  # trees 13,24,14 -> e1,e2,e4
    pair = BasisPair(m, b1, b2)
    all_fail = True
    for image in permutations(elements_of(b2)):
        phi = ExchangeBijection(tuple(zip(elements_of(b1), image)))
        if sbo_check(pair, phi)[0]:
            all_fail = False
    k4_ok = all_fail and lsbo_decide(pair) is None

    doubled = GraphicMatroid(
        Graph(3, ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)))
    )
    dpair = BasisPair(doubled, 0b00101, 0b01010)
    dphi = lsbo_decide(dpair)
    doubled_ok = dphi is not None and sbo_check(dpair, dphi)[0]

    mismatches = 0
    swept = 0
    for entry in binary_catalog():
        host = entry.matroid
        bases = list(host.bases())
        for i, x in enumerate(bases):
            for y in bases[i + 1:]:
                if bin(x & ~y).count("1") > 5:
                    continue
                swept += 1
                p = BasisPair(host, x, y)
                fast = lsbo_decide(p)
                slow = lsbo_oracle(p)
                if (fast is None) != (slow is None):
                    mismatches += 1
                elif fast is not None and not sbo_check(p, fast)[0]:
                    mismatches += 1
    elapsed = time.perf_counter() - start
    report(
        4,
        k4_ok and doubled_ok and mismatches == 0 and elapsed < 120,
        "pinned pair refuted, %d catalog pairs, %d mismatches, %.1fs"
        % (swept, mismatches, elapsed),
    )


def test_criterion_5_covering_and_three_coloring():
    start = time.perf_counter()
    formula_bad = 0
    for entry in full_catalog():
        m = entry.matroid
        if m.n > 10:
            continue
        if covering_number(m) != covering_number_search(m):
            formula_bad += 1
    m = cographic_matroid(k4_graph())
    found = 0
    small_max = 0
    for code in range(3**6):
        digits = [(code // 3**i) % 3 for i in range(6)]
        if len(set(digits)) != 3:
            continue
        normalized = []
        seen = {}
        for d in digits:
            normalized.append(seen.setdefault(d, len(seen)))
        coloring = Coloring.from_assignment(normalized)
        if not is_rainbow_circuit_free(m, coloring)[0]:
            continue
        if not is_rank_preserving_reduction(coloring_to_partition(coloring), m):
            continue
        found += 1
        if coloring.max_class_size() < 3:
            small_max += 1
    elapsed = time.perf_counter() - start
    report(
        5,
        formula_bad == 0 and found > 0 and small_max == 0 and elapsed < 30,
        "formula agrees, %d valid 3-colorings all with a big class, %.1fs"
        % (found, elapsed),
    )


def test_criterion_6_chained_family_bounds():
    start = time.perf_counter()
    g = gen_gqj(1, 1)
    shape_ok = (g.vertex_count, g.edge_count) == (8, 14)
    cm = cographic_matroid(g)
    shape_ok = shape_ok and cm.full_rank == 7
    shape_ok = shape_ok and covering_number(cm) == 2
    shape_ok = shape_ok and cm.is_connected()
    graph2, masks = gqj_circuit_family_masks(1, 1)
    family = CircuitFamily.of(cm, masks)
    family_ok = graph2 == g and verify_family(cm, family, 4)
    bounds_ok = rank_bounds(cm, family, 4) == (Fraction(4), 6)
    counts = {}
    for coloring in enumerate_rcf_colorings(cm, 3):
        counts[coloring.q] = counts.get(coloring.q, 0) + 1
    total = sum(counts.values())
    # the full population fits the budget, so the >= 10^4 sample is the
    # whole enumeration
    sample_ok = total == 5580 and all(4 <= q <= 6 for q in counts)
    elapsed = time.perf_counter() - start
    report(
        6,
        shape_ok and family_ok and bounds_ok and sample_ok and elapsed < 300,
        "bounds (4, 6), %d colorings exhaustive, colors %s, %.1fs"
        % (total, sorted(counts), elapsed),
    )


def test_criterion_7_graphic_track():
    start = time.perf_counter()
    k4 = k4_graph()
    k4_ok = pair_coloring(k4) is None
    sparse, violator = is_sparse_23(k4)
    k4_ok = k4_ok and not sparse and violator == 0b1111

    positives_ok = True
    k3 = Graph(3, ((0, 1), (0, 2), (1, 2)))
    k4e = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)))
    for graph in (k3, k4e):
        trace = h0_decomposition(graph)
        coloring = pair_coloring(graph)
        if trace is None or coloring is None:
            positives_ok = False
            continue
        expect = {frozenset((ea, eb)) for _, ea, eb in trace.steps}
        expect.add(frozenset((trace.base_edge,)))
        got = {frozenset(iter_bits(b)) for b in coloring.classes}
        gm = GraphicMatroid(graph)
        positives_ok = positives_ok and got == expect
        positives_ok = positives_ok and is_rainbow_circuit_free(gm, coloring)[0]

    prism = Graph(
        6,
        ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)),
    )
    prism_ok = (
        is_tight_23(prism)
        and h0_decomposition(prism) is None
        and pair_coloring(prism, method="exhaustive") is None
    )

    mismatches = 0
    census_total = 0
    for nv in range(3, 8):
        for graph in tight_graph_census(nv):
            census_total += 1
            has_trace = h0_decomposition(graph) is not None
            has_pairs = pair_coloring(graph, method="exhaustive") is not None
            if has_trace != has_pairs:
                mismatches += 1
    elapsed = time.perf_counter() - start
    report(
        7,
        k4_ok and positives_ok and prism_ok and mismatches == 0 and elapsed < 300,
        "%d tight graphs, %d equivalence mismatches, %.1fs"
        % (census_total, mismatches, elapsed),
    )


def test_criterion_8_report_determinism(tmp_path, capsys):
    outputs = []
    reports = []
    for i, threads in enumerate((1, 1, 4)):
        path = tmp_path / ("run%d.jsonl" % i)
        code = cli_main(
            ["verify-all", "--threads", str(threads), "--report", str(path)]
        )
        outputs.append((code, capsys.readouterr().out))
        reports.append(path.read_bytes())
    codes_ok = all(code == 0 for code, _ in outputs)
    stdout_ok = outputs[0][1] == outputs[1][1] == outputs[2][1]
    bytes_ok = reports[0] == reports[1] == reports[2]
    report(
        8,
        codes_ok and stdout_ok and bytes_ok,
        "3 runs, %d report bytes identical across reruns and thread counts"
        % len(reports[0]),
    )
