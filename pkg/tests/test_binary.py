"""GF(2) representation, nullspace circuits, and the four-point minor test."""

from itertools import combinations

import pytest
from conftest import fano, graphic_k4, mask, u24
from hypothesis import given, settings
from hypothesis import strategies as st

from rcfcolor import (
    BinaryMatroid,
    InputError,
    UniformMatroid,
    direct_sum,
    ensure_binary,
    find_u24_minor,
    free_matroid,
    gf2_rank,
    is_binary,
    same_matroid,
)
from rcfcolor.subsets import all_subsets, elements_of


def column(rows, i):
    c = 0
    for j, row in enumerate(rows):
        if row >> i & 1:
            c |= 1 << j
    return c


def brute_indep(rows, subset):
    """No nonempty sub-collection of the chosen columns XORs to zero."""
    cols = [column(rows, i) for i in elements_of(subset)]
    for k in range(1, len(cols) + 1):
        for combo in combinations(cols, k):
            acc = 0
            for c in combo:
                acc ^= c
            if acc == 0:
                return False
    return True


matrices = st.integers(2, 6).flatmap(
    lambda n: st.lists(
        st.integers(0, (1 << n) - 1), min_size=1, max_size=4
    ).map(lambda rows: (rows, n))
)


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_rank_matches_xor_oracle(case):
    rows, n = case
    m = BinaryMatroid(rows, n, allow_loops=True)
    for x in all_subsets(m.ground):
        assert m.indep(x) == brute_indep(rows, x)


@given(matrices)
@settings(max_examples=50, deadline=None)
def test_nullspace_circuits_match_search(case):
    rows, n = case
    m = BinaryMatroid(rows, n, allow_loops=True)
    assert sorted(m.circuits_nullspace()) == sorted(m.circuits())


def test_gf2_rank_known():
    assert gf2_rank([0b011, 0b101, 0b110]) == 2
    assert gf2_rank([0, 0]) == 0
    assert gf2_rank([1, 2, 4]) == 3


def test_from_matrix_round_trip():
    m = fano()
    assert m.n == 7
    assert m.full_rank == 3
    assert len(m.circuits()) == 14
    sizes = sorted(bin(c).count("1") for c in m.circuits())
    assert sizes == [3] * 7 + [4] * 7


def test_fano_circuits_are_lines_and_complements():
    m = fano()
    # the seven rank-2 lines of the plane, canonical masks
    lines = {c for c in m.circuits() if bin(c).count("1") == 3}
    for line in lines:
        assert m.rank(line) == 2
    quads = {c for c in m.circuits() if bin(c).count("1") == 4}
    assert quads == {m.ground & ~line for line in lines}


def test_u24_witness():
    w = find_u24_minor(u24())
    assert w is not None
    assert w.flat == 0
    assert w.elements == mask(0, 1, 2, 3)


def test_witness_is_a_real_minor():
    for m in (UniformMatroid(2, 5), UniformMatroid(3, 5), direct_sum(u24(), free_matroid(1))):
        w = find_u24_minor(m)
        assert w is not None
        minor = m.contract(w.flat)
        local = 0
        for e in elements_of(w.elements):
            local |= 1 << minor.parent_elements.index(e)
        assert same_matroid(minor.restrict(local), UniformMatroid(2, 4))


@pytest.mark.parametrize(
    "r, n, expect",
    [(1, 4, True), (2, 3, True), (3, 4, True), (2, 4, False), (2, 5, False), (3, 5, False)],
)
def test_uniform_binarity(r, n, expect):
    assert is_binary(UniformMatroid(r, n)) == expect


def test_all_loops_is_binary():
    assert is_binary(UniformMatroid(0, 3, allow_loops=True))


def test_binary_fixtures_have_no_witness():
    for m in (fano(), graphic_k4(), free_matroid(4)):
        assert find_u24_minor(m) is None
        assert is_binary(m)


def test_ensure_binary():
    ensure_binary(fano())
    with pytest.raises(InputError):
        ensure_binary(u24())


def test_dual_of_binary_stays_binary():
    for m in (fano(), graphic_k4()):
        assert is_binary(m.dual())
    assert not is_binary(u24().dual())


@given(matrices)
@settings(max_examples=30, deadline=None)
def test_generated_matrices_are_binary(case):
    rows, n = case
    m = BinaryMatroid(rows, n, allow_loops=True)
    if m.has_loops():
        return
    assert find_u24_minor(m) is None


def test_matrix_validation():
    with pytest.raises(InputError):
        BinaryMatroid.from_matrix(((0, 2), (1, 0)))
    with pytest.raises(InputError):
        BinaryMatroid([0b10], 1)
