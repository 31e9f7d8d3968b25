"""Binary matroids represented by GF(2) matrices, stored as int bitsets.

A column is an int whose bit j is the entry in row j. Circuits come from
minimal supports of the null space; binarity of arbitrary matroids is
decided by excluded-minor search for U_{2,4}.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .core import (
    InputError,
    LoopError,
    Matroid,
    SizeGuardError,
)
from .subsets import canonical_key, is_subset, iter_bits, subsets_of_size

__all__ = [
    "gf2_rank",
    "BinaryMatroid",
    "U24Witness",
    "find_u24_minor",
    "is_binary",
    "ensure_binary",
]

MINOR_SEARCH_LIMIT = 14
NULLITY_LIMIT = 12


def gf2_rank(vectors: Sequence[int]) -> int:
    """Rank of a list of GF(2) vectors given as int bitsets."""
    pivots: dict[int, int] = {}
    r = 0
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = v
                r += 1
                break
            v ^= p
    return r


class BinaryMatroid(Matroid):
    """Column matroid of a GF(2) matrix."""

    def __init__(self, rows: Sequence[int], n: int, *, allow_loops: bool = False):
        super().__init__(n, allow_loops=allow_loops)
        self.rows = tuple(rows)
        cols = []
        for i in range(n):
            c = 0
            for j, row in enumerate(self.rows):
                if row >> i & 1:
                    c |= 1 << j
            cols.append(c)
        if not allow_loops and any(c == 0 for c in cols):
            raise LoopError("zero column is a loop; pass allow_loops to build it")
        self.columns = tuple(cols)

    @classmethod
    def from_matrix(
        cls, matrix: Sequence[Sequence[int]], *, allow_loops: bool = False
    ) -> "BinaryMatroid":
        """Build from a row-major 0/1 matrix."""
        if not matrix:
            return cls((), 0, allow_loops=allow_loops)
        width = len(matrix[0])
        rows = []
        for row in matrix:
            if len(row) != width:
                raise InputError("ragged matrix")
            m = 0
            for i, v in enumerate(row):
                if v not in (0, 1):
                    raise InputError("matrix entries must be 0 or 1")
                if v:
                    m |= 1 << i
            rows.append(m)
        return cls(rows, width, allow_loops=allow_loops)

    known_binary = True

    def _rank_impl(self, mask: int) -> int:
        return gf2_rank([self.columns[e] for e in iter_bits(mask)])

    def circuits_nullspace(self) -> tuple[int, ...]:
        """Circuits as minimal supports of the null space of the matrix.

        Cross-checkable against the oracle enumeration in circuits().
        """
        # eliminate columns while tracking which inputs entered each pivot
        pivots: dict[int, tuple[int, int]] = {}
        kernel: list[int] = []
        for i, col in enumerate(self.columns):
            v, combo = col, 1 << i
            while v:
                h = v.bit_length() - 1
                p = pivots.get(h)
                if p is None:
                    pivots[h] = (v, combo)
                    break
                v ^= p[0]
                combo ^= p[1]
            else:
                kernel.append(combo)
        if len(kernel) > NULLITY_LIMIT:
            raise SizeGuardError("null space too large for support enumeration")
        supports: list[int] = []
        for picks in range(1, 1 << len(kernel)):
            s = 0
            for i in iter_bits(picks):
                s ^= kernel[i]
            supports.append(s)
        supports.sort(key=canonical_key)
        minimal: list[int] = []
        for s in supports:
            if not any(is_subset(m, s) for m in minimal):
                minimal.append(s)
        return tuple(sorted(minimal, key=canonical_key))


@dataclass(frozen=True)
class U24Witness:
    """Contract `flat`, restrict to `elements`: the minor is U_{2,4}."""

    flat: int
    elements: int


def _u24_at(matroid: Matroid, away: int, four: int) -> bool:
    base = matroid.rank(away)
    if matroid.rank(away | four) - base != 2:
        return False
    es = [1 << e for e in iter_bits(four)]
    for b in es:
        if matroid.rank(away | b) - base != 1:
            return False
    for i in range(4):
        for j in range(i + 1, 4):
            if matroid.rank(away | es[i] | es[j]) - base != 2:
                return False
    return True


def find_u24_minor(matroid: Matroid) -> U24Witness | None:
    """First U_{2,4} minor witness in canonical order, or None.

    Search runs over contract sets of increasing size, each taken in
    canonical subset order, then over 4-element restrictions; the contract
    set of the first hit is replaced by its closure, which preserves all
    the contraction ranks involved.
    """
    n = matroid.n
    if n > MINOR_SEARCH_LIMIT:
        raise SizeGuardError("minor search is capped at n <= 14")
    if n < 4:
        return None
    ground = matroid.ground
    seen_flats: set[int] = set()
    for xs in range(n - 3):
        for away in subsets_of_size(ground, xs):
            flat = matroid.closure(away)
            if flat in seen_flats:
                continue
            seen_flats.add(flat)
            rest = ground & ~flat
            if rest.bit_count() < 4:
                continue
            if matroid.full_rank - matroid.rank(away) < 2:
                continue
            for four in subsets_of_size(rest, 4):
                if _u24_at(matroid, away, four):
                    return U24Witness(flat=flat, elements=four)
    return None


def is_binary(matroid: Matroid) -> bool:
    """True iff the matroid has no U_{2,4} minor (excluded-minor search)."""
    return find_u24_minor(matroid) is None


def ensure_binary(matroid: Matroid) -> None:
    """Precondition helper: cheap constructor hints first, search otherwise."""
    if matroid.known_binary is True:
        return
    if matroid.known_binary is False:
        raise InputError("operation requires a binary matroid")
    cached = getattr(matroid, "_binary_search_result", None)
    if cached is None:
        cached = is_binary(matroid)
        matroid._binary_search_result = cached
    if not cached:
        raise InputError("operation requires a binary matroid")
