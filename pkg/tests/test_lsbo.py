"""Serial exchange bijections between basis pairs."""

from itertools import permutations

import pytest
from conftest import doubled_triangle, fano, graphic_k4, mask, u24
from hypothesis import given, settings
from hypothesis import strategies as st

from rcfcolor import (
    BasisPair,
    ExchangeBijection,
    GraphicMatroid,
    InputError,
    UniformMatroid,
    lsbo_decide,
    lsbo_oracle,
    sbo_check,
)
from rcfcolor.subsets import elements_of


def test_basis_pair_validation():
    m = graphic_k4()
    with pytest.raises(InputError):
        BasisPair(m, mask(0, 1, 3), mask(1, 2, 4))
    BasisPair(m, mask(0, 1, 2), mask(3, 4, 1))


def test_identity_pair():
    m = fano()
    basis = next(m.bases())
    pair = BasisPair(m, basis, basis)
    phi = lsbo_decide(pair)
    assert phi is not None
    assert phi.pairs == tuple((e, e) for e in elements_of(basis))


def test_decide_refuses_non_binary():
    pair = BasisPair(u24(), mask(0, 1), mask(2, 3))
    with pytest.raises(InputError):
        lsbo_decide(pair)


def test_doubled_triangle_parallel_match():
    m = GraphicMatroid(doubled_triangle())
    pair = BasisPair(m, mask(0, 2), mask(1, 3))
    phi = lsbo_decide(pair)
    assert phi is not None
    assert phi.pairs == ((0, 1), (2, 3))
    ok, failing = sbo_check(pair, phi)
    assert ok and failing is None


def test_k4_disjoint_trees_have_no_bijection():
    """The pinned tree pair: every bijection fails, decide agrees."""
    m = graphic_k4()
    b1 = mask(0, 3, 5)
    b2 = mask(1, 2, 4)
    pair = BasisPair(m, b1, b2)
    xs = elements_of(b1)
    for image in permutations(elements_of(b2)):
        phi = ExchangeBijection(tuple(zip(xs, image)))
        ok, failing = sbo_check(pair, phi)
        assert not ok
        assert failing is not None
    assert lsbo_decide(pair) is None
    assert lsbo_oracle(pair) is None


def test_failing_subset_is_a_real_counterexample():
    m = graphic_k4()
    pair = BasisPair(m, mask(0, 3, 5), mask(1, 2, 4))
    phi = ExchangeBijection(((0, 1), (3, 2), (5, 4)))
    ok, failing = sbo_check(pair, phi)
    assert not ok
    # swapping phi(X) for X inside B1 must break independence
    image = 0
    for x, y in phi.pairs:
        if failing >> x & 1:
            image |= 1 << y
    assert not m.indep((mask(0, 3, 5) & ~failing) | image)


def test_oracle_runs_on_any_matroid():
    # the brute harness skips the binary gate on purpose
    m = UniformMatroid(3, 6)
    pair = BasisPair(m, mask(0, 1, 2), mask(3, 4, 5))
    phi = lsbo_oracle(pair)
    assert phi is not None
    assert sbo_check(pair, phi)[0]


def test_bijection_shape():
    """Maps all of B1 onto B2, fixing the intersection pointwise."""
    m = fano()
    bases = list(m.bases())
    b1, b2 = bases[0], bases[-1]
    pair = BasisPair(m, b1, b2)
    phi = lsbo_decide(pair)
    if phi is None:
        return
    xs = sorted(x for x, _ in phi.pairs)
    ys = sorted(y for _, y in phi.pairs)
    assert xs == elements_of(b1)
    assert ys == elements_of(b2)
    for x, y in phi.pairs:
        if b1 >> x & 1 and b2 >> x & 1:
            assert y == x


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_decide_agrees_with_oracle(seed):
    """Backtracking and brute permutation search always agree."""
    import random

    rng = random.Random(seed)
    m = rng.choice(
        [graphic_k4(), fano(), GraphicMatroid(doubled_triangle())]
    )
    bases = list(m.bases())
    b1 = rng.choice(bases)
    b2 = rng.choice(bases)
    if bin(b1 ^ b2).count("1") > 8:
        return
    pair = BasisPair(m, b1, b2)
    fast = lsbo_decide(pair)
    slow = lsbo_oracle(pair)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert sbo_check(pair, fast)[0]
        assert sbo_check(pair, slow)[0]


def test_oracle_guard():
    from rcfcolor import SizeGuardError

    m = UniformMatroid(9, 18)
    b1 = sum(1 << e for e in range(9))
    b2 = sum(1 << e for e in range(9, 18))
    with pytest.raises(SizeGuardError):
        lsbo_oracle(BasisPair(m, b1, b2))
