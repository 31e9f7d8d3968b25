"""Locally strongly base orderable pairs of bases.

A pair of bases B1, B2 with B1 u B2 = S is LSBO when some bijection
phi: B1 -> B2, identity on the intersection, satisfies the strong exchange
property: (B1 - X) u phi(X) is a basis for every X within B1. For binary
hosts this is equivalent to the contraction by B1 n B2 having a standard
coloring whose classes pair one element of each basis, which is what the
decision procedure searches for.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .binary import ensure_binary
from .core import InputError, Matroid, SizeGuardError
from .subsets import all_subsets, bit, elements_of, iter_bits

__all__ = [
    "BasisPair",
    "ExchangeBijection",
    "sbo_check",
    "lsbo_decide",
    "lsbo_oracle",
]

ORACLE_DIFF_LIMIT = 8


@dataclass(frozen=True)
class BasisPair:
    """Two bases of the host; the host restricted to their union."""

    matroid: Matroid
    b1: int
    b2: int

    def __post_init__(self):
        m = self.matroid
        if not m.is_basis(self.b1) or not m.is_basis(self.b2):
            raise InputError("both sets must be bases")

    def restricted(self) -> tuple[Matroid, int, int, tuple[int, ...] | None]:
        """(host', b1', b2', back-map); restricts first when the union
        misses part of the ground set."""
        union = self.b1 | self.b2
        if union == self.matroid.ground:
            return (self.matroid, self.b1, self.b2, None)
        sub = self.matroid.restrict(union)
        pos = {e: i for i, e in enumerate(sub.parent_elements)}

        def shrink(mask: int) -> int:
            out = 0
            for e in iter_bits(mask):
                out |= 1 << pos[e]
            return out

        return (sub, shrink(self.b1), shrink(self.b2), sub.parent_elements)


@dataclass(frozen=True)
class ExchangeBijection:
    """phi as a sorted tuple of (x, phi(x)) pairs over B1."""

    pairs: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def _validate_bijection(pair: BasisPair, phi: ExchangeBijection) -> dict[int, int]:
    mapping = phi.as_dict()
    b1 = set(elements_of(pair.b1))
    b2 = set(elements_of(pair.b2))
    if set(mapping) != b1 or set(mapping.values()) != b2:
        raise InputError("phi must be a bijection from B1 onto B2")
    if len(set(mapping.values())) != len(mapping):
        raise InputError("phi must be injective")
    for e in b1 & b2:
        if mapping[e] != e:
            raise InputError("phi must fix the intersection pointwise")
    return mapping


def sbo_check(pair: BasisPair, phi: ExchangeBijection) -> tuple[bool, int | None]:
    """Test the exchange property on every subset of B1.

    Returns (True, None) or (False, first failing X in canonical order).
    """
    mapping = _validate_bijection(pair, phi)
    m = pair.matroid
    for x in all_subsets(pair.b1):
        swapped = pair.b1 & ~x
        for e in iter_bits(x):
            swapped |= bit(mapping[e])
        if not m.is_basis(swapped):
            return (False, x)
    return (True, None)


def lsbo_decide(pair: BasisPair) -> ExchangeBijection | None:
    """Search for a witnessing bijection via paired standard classes.

    Working in the restriction to B1 u B2 and past the intersection, a
    valid phi pairs each leftover B1 element with a B2 element so that the
    pairs, in some order, have closed prefix unions over the intersection.
    Backtracks over the next pair in canonical order; None is definitive
    for binary hosts.
    """
    ensure_binary(pair.matroid)
    sub, b1, b2, back = pair.restricted()
    inter = b1 & b2
    only1 = elements_of(b1 & ~b2)
    only2 = elements_of(b2 & ~b1)
    chosen: list[tuple[int, int]] = []
    dead: set[int] = set()

    def rec(prefix: int, used1: int, used2: int) -> bool:
        if used1 == b1 & ~b2:
            return True
        if prefix in dead:
            return False
        for x in only1:
            if used1 >> x & 1:
                continue
            for y in only2:
                if used2 >> y & 1:
                    continue
                u = prefix | bit(x) | bit(y)
                if sub.rank(u) != sub.rank(prefix) + 1:
                    continue
                if sub.closure(u) != u:
                    continue
                chosen.append((x, y))
                if rec(u, used1 | bit(x), used2 | bit(y)):
                    return True
                chosen.pop()
        dead.add(prefix)
        return False

    found = rec(inter, 0, 0)
    if not found:
        return None
    pairs = [(e, e) for e in elements_of(inter)] + chosen
    if back is not None:
        pairs = [(back[x], back[y]) for x, y in pairs]
    return ExchangeBijection(tuple(sorted(pairs)))


def lsbo_oracle(pair: BasisPair) -> ExchangeBijection | None:
    """Brute force over all bijections, first success in canonical order."""
    diff = (pair.b1 & ~pair.b2).bit_count()
    if diff > ORACLE_DIFF_LIMIT:
        raise SizeGuardError("bijection enumeration is capped at 8 moved elements")
    only1 = elements_of(pair.b1 & ~pair.b2)
    only2 = elements_of(pair.b2 & ~pair.b1)
    fixed = [(e, e) for e in elements_of(pair.b1 & pair.b2)]
    for perm in itertools.permutations(only2):
        pairs = tuple(sorted(fixed + list(zip(only1, perm))))
        phi = ExchangeBijection(pairs)
        ok, _ = sbo_check(pair, phi)
        if ok:
            return phi
    return None
