"""Reductions, covering numbers, decompositions and circuit-family bounds.

A matroid N is a reduction of M (on the same ground set) when every
independent set of N is independent in M; rank-preserving reductions keep
the full rank. RCF colorings correspond one to one with reductions to
partition matroids, which is what the conjecture probing below explores.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coloring import Coloring, enumerate_rcf_colorings
from .core import (
    InputError,
    LoopError,
    Matroid,
    OracleMatroid,
    PartitionMatroid,
    SizeGuardError,
    TheoremViolationError,
    same_matroid,
)
from .binary import ensure_binary
from .subsets import all_subsets, canonical_key, is_subset, iter_bits, subsets_of_size

__all__ = [
    "is_reduction",
    "is_rank_preserving_reduction",
    "coloring_to_partition",
    "partition_to_coloring",
    "covering_number",
    "covering_number_search",
    "lucas_flat",
    "conjecture_search",
    "CircuitFamily",
    "verify_family",
    "rank_bounds",
]

COVERING_LIMIT = 20
COVER_SEARCH_LIMIT = 10
FLAT_SEARCH_LIMIT = 14


def is_reduction(reduced: Matroid, host: Matroid) -> bool:
    """True iff every independent set of `reduced` is independent in `host`.

    Equivalent test: no circuit of the host may be independent in the
    reduced matroid, since any violation would shrink to one.
    """
    if reduced.n != host.n:
        raise InputError("reduction needs a shared ground set")
    return not any(reduced.indep(c) for c in host.circuits())


def is_rank_preserving_reduction(reduced: Matroid, host: Matroid) -> bool:
    return (
        is_reduction(reduced, host)
        and reduced.full_rank == host.full_rank
    )


def coloring_to_partition(coloring: Coloring) -> PartitionMatroid:
    return PartitionMatroid(coloring.classes, coloring.n)


def partition_to_coloring(partition: PartitionMatroid) -> Coloring:
    return Coloring(partition.classes, partition.n)


def covering_number(matroid: Matroid) -> int:
    """Fewest independent sets covering the ground set.

    Computed as max over nonempty X of ceil(|X| / r(X)), which matches the
    exact cover search (cross-checked separately at small sizes).
    """
    if matroid.n == 0:
        return 0
    if matroid.has_loops():
        raise LoopError("a loop lies in no independent set")
    if matroid.n > COVERING_LIMIT:
        raise SizeGuardError("covering number is capped at n <= 20")
    best = 1
    for mask in range(1, 1 << matroid.n):
        size = mask.bit_count()
        if size <= best:
            continue
        r = matroid.rank(mask)
        value = -(-size // r)
        if value > best:
            best = value
    return best


def covering_number_search(matroid: Matroid) -> int:
    """Exact cover search used as the oracle for the formula (n <= 10)."""
    if matroid.n == 0:
        return 0
    if matroid.has_loops():
        raise LoopError("a loop lies in no independent set")
    if matroid.n > COVER_SEARCH_LIMIT:
        raise SizeGuardError("exact cover search is capped at n <= 10")
    n = matroid.n

    def can_cover(k: int) -> bool:
        parts = [0] * k

        def rec(e: int) -> bool:
            if e == n:
                return True
            b = 1 << e
            opened = True
            for i in range(k):
                if parts[i] == 0:
                    # only the first empty part matters; the rest are symmetric
                    if not opened:
                        break
                    opened = False
                if matroid.indep(parts[i] | b):
                    parts[i] |= b
                    if rec(e + 1):
                        return True
                    parts[i] &= ~b
            return False

        return rec(0)

    lower = max(1, -(-n // matroid.full_rank)) if matroid.full_rank else n
    for k in range(lower, n + 1):
        if can_cover(k):
            return k
    return n


def _flats(matroid: Matroid) -> list[int]:
    """All flats in canonical order (closure images of all subsets)."""
    if matroid.n > FLAT_SEARCH_LIMIT:
        raise SizeGuardError("flat enumeration is capped at n <= 14")
    seen: set[int] = set()
    for mask in range(1 << matroid.n):
        seen.add(matroid.closure(mask))
    return sorted(seen, key=canonical_key)


def restriction_contraction_sum(matroid: Matroid, flat: int) -> OracleMatroid:
    """M|F + M/F glued back onto the original ground set labels."""
    base = matroid.rank(flat)

    def indep(mask: int) -> bool:
        inside = mask & flat
        outside = mask & ~flat
        if matroid.rank(inside) != inside.bit_count():
            return False
        return matroid.rank(flat | outside) - base == outside.bit_count()

    hint = True if matroid.known_binary else None
    return OracleMatroid(
        matroid.n, indep, allow_loops=matroid.allow_loops, known_binary=hint
    )


def lucas_flat(reduced: Matroid, host: Matroid) -> int:
    """A proper nonempty flat F with N <= M|F + M/F <= M (rank-preserving).

    Exhaustive over the flats of the host in canonical order; guaranteed to
    exist for binary N strictly below binary M, so exhaustion raises.
    """
    if reduced.n != host.n:
        raise InputError("needs a shared ground set")
    ensure_binary(reduced)
    ensure_binary(host)
    if not is_rank_preserving_reduction(reduced, host):
        raise InputError("needs a rank-preserving reduction")
    if same_matroid(reduced, host):
        raise InputError("needs a strict reduction")
    for flat in _flats(host):
        if flat == 0 or flat == host.ground:
            continue
        middle = restriction_contraction_sum(host, flat)
        if is_rank_preserving_reduction(reduced, middle) and (
            is_rank_preserving_reduction(middle, host)
        ):
            return flat
    raise TheoremViolationError("no separating flat found for a binary pair")


def conjecture_search(
    matroid: Matroid,
    bound: int,
    *,
    rank_preserving: bool = False,
) -> Coloring | None:
    """First RCF coloring with classes of at most `bound` elements.

    Partitions are explored in nondecreasing order of their largest class,
    so a hit minimizes the worst class size. None is a definitive absence.
    """
    if matroid.has_loops():
        raise LoopError("a loop admits no RCF coloring")
    if matroid.n and bound < covering_number(matroid):
        raise InputError("bound below the covering number cannot work")
    exact = matroid.full_rank if rank_preserving else None
    for cap in range(1, bound + 1):
        for coloring in enumerate_rcf_colorings(matroid, cap, exact_colors=exact):
            if coloring.max_class_size() == cap:
                return coloring
    return None


@dataclass(frozen=True)
class CircuitFamily:
    """A set of circuits of a host matroid, kept in canonical order."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, matroid: Matroid, members) -> "CircuitFamily":
        ms = tuple(sorted(set(members), key=canonical_key))
        for m in ms:
            if not _is_circuit(matroid, m):
                raise InputError("family member is not a circuit of the host")
        return cls(ms)


def _is_circuit(matroid: Matroid, mask: int) -> bool:
    if mask == 0 or matroid.indep(mask):
        return False
    return all(matroid.indep(mask & ~(1 << e)) for e in iter_bits(mask))


def verify_family(matroid: Matroid, family: CircuitFamily, g: int) -> bool:
    """Sparse-intersection condition on a circuit family.

    For every i up to g-1 and every i-element X, at most i-1 members meet
    X in two or more elements. Sizes 0 and 1 hold vacuously.
    """
    if g < 3:
        raise InputError("the condition needs g >= 3")
    for size in range(2, g):
        for x in subsets_of_size(matroid.ground, size):
            hits = 0
            for member in family.members:
                if (member & x).bit_count() >= 2:
                    hits += 1
                    if hits > size - 1:
                        return False
    return True


def rank_bounds(
    matroid: Matroid, family: CircuitFamily, g: int
) -> tuple[Fraction, int]:
    """Color-count bounds for RCF colorings with classes below g.

    Any RCF coloring all of whose classes have at most g-1 elements uses
    between |family|/(g-2) and n - |family| colors. The lower bound is kept
    exact as a rational.
    """
    if g < 3:
        raise InputError("bounds need g >= 3")
    if not verify_family(matroid, family, g):
        raise InputError("family fails the sparse-intersection condition")
    k = len(family.members)
    return (Fraction(k, g - 2), matroid.n - k)
