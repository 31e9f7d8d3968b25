"""Rank oracle, duality, and minor behavior on small ground sets."""

import pytest
from conftest import fano, graphic_k4, k4, mask, u24
from hypothesis import given, settings
from hypothesis import strategies as st

from rcfcolor import (
    BinaryMatroid,
    DualMatroid,
    GraphicMatroid,
    InputError,
    MatroidError,
    PartitionMatroid,
    SizeGuardError,
    UniformMatroid,
    check_axioms,
    direct_sum,
    free_matroid,
    same_matroid,
)
from rcfcolor.subsets import all_subsets, elements_of, iter_bits


def random_binary(draw_rows, n):
    return BinaryMatroid(draw_rows, n, allow_loops=True)


binary_matroids = st.integers(2, 5).flatmap(
    lambda n: st.lists(
        st.integers(1, (1 << n) - 1), min_size=1, max_size=4
    ).map(lambda rows: random_binary(rows, n))
)


def test_uniform_rank_formula():
    m = UniformMatroid(2, 5)
    for x in all_subsets(m.ground):
        assert m.rank(x) == min(bin(x).count("1"), 2)


def test_uniform_validation():
    with pytest.raises(InputError):
        UniformMatroid(6, 4)
    with pytest.raises(InputError):
        UniformMatroid(-1, 4)


@given(binary_matroids)
@settings(max_examples=60, deadline=None)
def test_rank_axioms(m):
    """Bounds, unit monotonicity, local submodularity."""
    for x in all_subsets(m.ground):
        rx = m.rank(x)
        assert 0 <= rx <= bin(x).count("1")
        rest = elements_of(m.ground & ~x)
        for e in rest:
            assert rx <= m.rank(x | 1 << e) <= rx + 1
        for i, e in enumerate(rest):
            for f in rest[i + 1:]:
                lhs = m.rank(x | 1 << e) + m.rank(x | 1 << f)
                assert lhs >= m.rank(x | 1 << e | 1 << f) + rx


@given(binary_matroids)
@settings(max_examples=40, deadline=None)
def test_closure_properties(m):
    for x in all_subsets(m.ground):
        cl = m.closure(x)
        assert cl & x == x
        assert m.rank(cl) == m.rank(x)
        assert m.closure(cl) == cl
        assert m.is_closed(x) == (cl == x)


def test_loops_and_guards():
    m = BinaryMatroid([0b0110], 4, allow_loops=True)
    assert m.has_loops()
    assert m.loops() == 0b1001
    with pytest.raises(InputError):
        BinaryMatroid([0b0110], 4)


def test_bases_u24():
    m = u24()
    found = list(m.bases())
    assert len(found) == 6
    for b in found:
        assert bin(b).count("1") == 2
        assert m.is_basis(b)
    assert not m.is_basis(0b0001)


def test_circuits_k4():
    """K4 cycle space: four triangles, three quadrilaterals."""
    circuits = graphic_k4().circuits()
    sizes = sorted(bin(c).count("1") for c in circuits)
    assert sizes == [3, 3, 3, 3, 4, 4, 4]
    assert mask(0, 1, 3) in circuits
    assert mask(0, 2, 4) in circuits


@given(binary_matroids)
@settings(max_examples=40, deadline=None)
def test_circuit_axioms(m):
    """Antichain plus weak elimination."""
    circuits = m.circuits()
    for c in circuits:
        assert not m.indep(c)
        for e in iter_bits(c):
            assert m.indep(c & ~(1 << e))
    for i, c1 in enumerate(circuits):
        for c2 in circuits[i + 1:]:
            assert c1 & ~c2 and c2 & ~c1
            common = c1 & c2
            if not common:
                continue
            e = common & -common
            union = (c1 | c2) & ~e
            assert any(d & ~union == 0 for d in circuits)


@given(binary_matroids)
@settings(max_examples=30, deadline=None)
def test_dual_involution_and_rank(m):
    d = m.dual()
    assert same_matroid(d.dual(), m)
    n = m.n
    full = m.full_rank
    for x in all_subsets(m.ground):
        expect = bin(x).count("1") + m.rank(m.ground & ~x) - full
        assert d.rank(x) == expect


def test_cocircuits_are_dual_circuits():
    m = graphic_k4()
    assert sorted(m.cocircuits()) == sorted(m.dual().circuits())
    # each cut meets every basis
    for cut in m.cocircuits():
        assert all(b & cut for b in m.bases())


def test_restrict_contract_relabel():
    m = fano()
    keep = mask(1, 3, 4, 6)
    r = m.restrict(keep)
    assert r.n == 4
    assert r.parent_elements == (1, 3, 4, 6)
    assert r.expand(0b0101) == mask(1, 4)
    for x in all_subsets(r.ground):
        assert r.rank(x) == m.rank(r.expand(x))


def test_contract_rank_formula():
    m = fano()
    away = mask(0, 2)
    c = m.contract(away)
    assert c.n == 5
    base = m.rank(away)
    for x in all_subsets(c.ground):
        assert c.rank(x) == m.rank(c.expand(x) | away) - base


@given(binary_matroids)
@settings(max_examples=20, deadline=None)
def test_minor_duality(m):
    """Restriction and contraction swap under duality."""
    keep = m.ground & 0b0110
    if keep == 0 or keep == m.ground:
        return
    left = m.restrict(keep).dual()
    right = m.dual().contract(m.ground & ~keep)
    assert same_matroid(left, right)


def test_partition_matroid():
    pm = PartitionMatroid((mask(0, 1), mask(2), mask(3, 4, 5)), 6)
    assert pm.full_rank == 3
    assert pm.rank(mask(0, 1, 2)) == 2
    assert pm.indep(mask(0, 2, 5))
    assert not pm.indep(mask(3, 4))
    with pytest.raises(InputError):
        PartitionMatroid((mask(0, 1), mask(1, 2)), 3)
    with pytest.raises(InputError):
        PartitionMatroid((mask(0),), 2)


def test_connectivity_and_girth():
    m = graphic_k4()
    assert m.is_connected()
    assert m.girth() == 3
    assert m.cogirth() == 3
    both = direct_sum(u24(), free_matroid(1))
    assert not both.is_connected()
    f = fano()
    assert f.girth() == 3
    assert f.cogirth() == 4


def test_parallel_classes():
    rows = [0b01111]
    m = BinaryMatroid(rows, 5, allow_loops=True)
    # element 4 is a loop, 0..3 are mutually parallel
    assert m.loops() == 0b10000
    assert m.parallel_classes() == (0b01111,)


def test_same_matroid_distinguishes():
    assert same_matroid(UniformMatroid(2, 4), UniformMatroid(2, 4))
    assert not same_matroid(UniformMatroid(2, 4), UniformMatroid(3, 4))
    assert not same_matroid(UniformMatroid(2, 4), UniformMatroid(2, 5))


def test_check_axioms_fixtures():
    for m in (u24(), fano(), graphic_k4(), free_matroid(3)):
        check_axioms(m)


def test_size_guard_on_tables():
    big = UniformMatroid(3, 40)
    with pytest.raises(SizeGuardError):
        big.independence_table()
    with pytest.raises(MatroidError):
        free_matroid(3).girth()


def test_direct_sum_ranks():
    s = direct_sum(UniformMatroid(1, 2), UniformMatroid(2, 3))
    assert s.n == 5
    assert s.full_rank == 3
    assert s.rank(mask(0, 1)) == 1
    assert s.rank(mask(0, 2, 3)) == 3


def test_dual_type_exposes_base():
    m = graphic_k4()
    d = m.dual()
    assert isinstance(d, DualMatroid)
    assert isinstance(d.base, GraphicMatroid)
