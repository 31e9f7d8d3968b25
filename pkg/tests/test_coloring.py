"""Rainbow circuit-free colorings: verdicts, standardness, enumeration."""

import pytest
from conftest import doubled_triangle, fano, graphic_k4, mask, u24
from hypothesis import given, settings
from hypothesis import strategies as st

from rcfcolor import (
    Coloring,
    GraphicMatroid,
    InputError,
    UniformMatroid,
    corollary_cut_class,
    corollary_parallel_class,
    direct_sum,
    enumerate_rcf_colorings,
    free_matroid,
    is_rainbow_circuit_free,
    is_standard,
    lemma_equiv_report,
    nonstandard_coloring,
    standard_coloring,
    theorem1_dual_verdict,
    theorem1_verdict,
)
from rcfcolor.subsets import iter_bits, set_partitions


def classes_of(coloring):
    return [sorted(iter_bits(c)) for c in coloring.classes]


def test_coloring_construction():
    c = Coloring((mask(0, 2), mask(1), mask(3)), 4)
    assert c.q == 3
    assert c.class_of(2) == 0
    assert c.assignment() == [0, 1, 0, 2]
    assert c.max_class_size() == 2
    back = Coloring.from_assignment([0, 1, 0, 2])
    assert back.canonical() == c.canonical()


def test_coloring_validation():
    with pytest.raises(InputError):
        Coloring((mask(0), mask(0, 1)), 2)
    with pytest.raises(InputError):
        Coloring((mask(0),), 2)
    with pytest.raises(InputError):
        Coloring((mask(0), 0), 1)
    with pytest.raises(InputError):
        Coloring.from_assignment([0, 2])


def test_rcf_detection_k4():
    m = graphic_k4()
    matchings = Coloring.from_assignment([0, 1, 2, 2, 1, 0])
    ok, witness = is_rainbow_circuit_free(m, matchings)
    assert not ok
    # witness is a triangle wearing three colors
    assert witness in m.circuits()
    colors = {matchings.class_of(e) for e in iter_bits(witness)}
    assert len(colors) == bin(witness).count("1")
    stars = Coloring.from_assignment([0, 0, 0, 1, 1, 2])
    ok, witness = is_rainbow_circuit_free(m, stars)
    assert ok and witness is None


def test_standard_coloring_k4():
    m = graphic_k4()
    coloring, order = standard_coloring(m)
    assert classes_of(coloring) == [[0], [1, 3], [2, 4, 5]]
    assert order.kind == "standard-order"
    assert order.ordering == (0, 1, 2)
    assert is_rainbow_circuit_free(m, coloring)[0]
    assert is_standard(m, coloring) == (0, 1, 2)


def test_standard_coloring_seeded():
    m = graphic_k4()
    first, _ = standard_coloring(m, [5, 3])
    assert classes_of(first) == [[5], [3, 4], [0, 1, 2]]
    # a seed swallowed by an earlier class is skipped, not an error
    second, _ = standard_coloring(m, [0, 3])
    assert classes_of(second) == [[0], [1, 3], [2, 4, 5]]
    with pytest.raises(InputError):
        standard_coloring(m, [0, 0])
    with pytest.raises(InputError):
        standard_coloring(m, [9])


def test_standard_coloring_rejects_loops():
    m = UniformMatroid(0, 2, allow_loops=True)
    with pytest.raises(InputError):
        standard_coloring(m)


def test_is_standard_needs_exact_rank():
    m = graphic_k4()
    with pytest.raises(InputError):
        is_standard(m, Coloring.from_assignment([0] * 6))


def test_balanced_u24_pairing_is_not_standard():
    m = u24()
    pairing = Coloring.from_assignment([0, 0, 1, 1])
    assert is_rainbow_circuit_free(m, pairing)[0]
    assert is_standard(m, pairing) is None
    assert lemma_equiv_report(m, pairing) == (False, False, False)


def test_lemma_conditions_agree_small():
    entries = [u24(), graphic_k4(), UniformMatroid(2, 3), fano().restrict(mask(0, 1, 2, 3, 4))]
    for m in entries:
        r = m.full_rank
        for blocks in set_partitions(range(m.n), exact_blocks=r):
            report = lemma_equiv_report(m, Coloring(blocks, m.n))
            assert report[0] == report[1] == report[2]


def test_theorem1_verdict_k4():
    m = graphic_k4()
    coloring, _ = standard_coloring(m)
    v = theorem1_verdict(m, coloring)
    assert v.kind == "mono-cut"
    assert v.class_index == 2
    assert v.subset == mask(2, 4, 5)
    rainbow = Coloring.from_assignment([0, 1, 2, 2, 1, 0])
    v = theorem1_verdict(m, rainbow)
    assert v.kind == "rainbow-circuit"
    assert v.subset in m.circuits()


def test_theorem1_dual_verdict_k4():
    m = graphic_k4()
    pairing = Coloring.from_assignment([0, 0, 1, 1, 2, 2])
    v = theorem1_dual_verdict(m, pairing)
    assert v.kind == "rainbow-cut"
    assert v.subset in m.cocircuits()
    colors = {pairing.class_of(e) for e in iter_bits(v.subset)}
    assert len(colors) == bin(v.subset).count("1")


binary_colorings = st.integers(0, 3**6 - 1)


@given(binary_colorings)
@settings(max_examples=120, deadline=None)
def test_verdict_certificates_always_check_out(code):
    """Every exactly-r coloring gets a certifiable verdict."""
    m = graphic_k4()
    digits = [(code // 3**i) % 3 for i in range(6)]
    if len(set(digits)) != 3:
        return
    coloring = Coloring.from_assignment(digits)
    v = theorem1_verdict(m, coloring)
    if v.kind == "rainbow-circuit":
        assert v.subset in m.circuits()
        colors = {coloring.class_of(e) for e in iter_bits(v.subset)}
        assert len(colors) == bin(v.subset).count("1")
        assert not is_rainbow_circuit_free(m, coloring)[0]
    else:
        assert v.kind == "mono-cut"
        assert v.subset in m.cocircuits()
        assert v.subset & ~coloring.classes[v.class_index] == 0
        assert is_rainbow_circuit_free(m, coloring)[0]


def test_corollaries():
    m = graphic_k4()
    coloring, _ = standard_coloring(m)
    idx = corollary_cut_class(m, coloring)
    cls = coloring.classes[idx]
    assert any(cut & ~cls == 0 for cut in m.cocircuits())
    d = GraphicMatroid(doubled_triangle())
    two = Coloring.from_assignment([0, 0, 1, 1, 1, 1])
    pidx = corollary_parallel_class(d, two)
    assert d.rank(two.classes[pidx]) == 1
    assert d.is_closed(two.classes[pidx])


def test_nonstandard_constructions():
    cases = [
        (u24(), [[0, 1], [2, 3]]),
        (UniformMatroid(2, 5), [[0, 1], [2, 3, 4]]),
        (UniformMatroid(3, 5), [[0], [1, 2], [3, 4]]),
        (direct_sum(u24(), free_matroid(1)), [[0, 1], [2, 3], [4]]),
    ]
    for m, expect in cases:
        coloring = nonstandard_coloring(m)
        assert classes_of(coloring) == expect
        assert coloring.q == m.full_rank
        assert is_rainbow_circuit_free(m, coloring)[0]
        assert is_standard(m, coloring) is None


def test_nonstandard_refuses_binary():
    with pytest.raises(InputError):
        nonstandard_coloring(graphic_k4())


def test_enumerate_rcf_u24():
    m = u24()
    found = list(enumerate_rcf_colorings(m, 2, exact_colors=2))
    assert len(found) == 3
    for c in found:
        assert c.max_class_size() == 2
        assert is_rainbow_circuit_free(m, c)[0]
    # generator is lazy: first item available without exhausting
    gen = enumerate_rcf_colorings(m, 3)
    first = next(gen)
    assert is_rainbow_circuit_free(m, first)[0]


def test_enumerate_matches_brute_filter():
    m = graphic_k4()
    fast = {c.canonical().classes for c in enumerate_rcf_colorings(m, 3)}
    slow = set()
    for blocks in set_partitions(range(m.n), max_block_size=3):
        c = Coloring(blocks, m.n)
        if is_rainbow_circuit_free(m, c)[0]:
            slow.add(c.canonical().classes)
    assert fast == slow
