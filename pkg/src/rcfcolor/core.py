"""Oracle-based matroids on ground sets {0, ..., n-1}.

Every matroid exposes memoized rank/independence oracles plus the derived
operations: closure, circuits, cuts, duals, minors, direct sums, girth and
connectivity. Instances are immutable after construction; the only internal
mutation is cache filling (per-instance dict writes, atomic under the GIL),
so instances can be shared across worker threads.

Minors relabel their ground set back to {0, ..., k-1}; the original element
ids are kept in `parent_elements` so witnesses can be mapped back.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence

from .subsets import (
    all_subsets,
    bit,
    canonical_key,
    elements_of,
    is_subset,
    iter_bits,
    mask_of,
    subsets_of_size,
)

__all__ = [
    "MatroidError",
    "InputError",
    "LoopError",
    "SizeGuardError",
    "TheoremViolationError",
    "Matroid",
    "OracleMatroid",
    "UniformMatroid",
    "PartitionMatroid",
    "DualMatroid",
    "RestrictionMatroid",
    "ContractionMatroid",
    "DirectSumMatroid",
    "free_matroid",
    "direct_sum",
    "same_matroid",
    "check_axioms",
]

AXIOM_CHECK_LIMIT = 12
TABLE_LIMIT = 16


class MatroidError(Exception):
    """Base class for matroid failures."""


class InputError(MatroidError):
    """Bad input or a violated operation precondition."""


class LoopError(InputError):
    """A loop appeared where a loopless matroid is required."""


class SizeGuardError(MatroidError):
    """Instance exceeds the desk-scale guard of an exhaustive algorithm."""


class TheoremViolationError(MatroidError):
    """A certificate guaranteed by the theory could not be found."""


class Matroid:
    """Base matroid. Subclasses override _rank_impl (or indep for oracles)."""

    known_binary: bool | None = None

    def __init__(self, n: int, *, allow_loops: bool = False):
        if n < 0:
            raise InputError("ground set size must be nonnegative")
        self.n = n
        self.allow_loops = allow_loops
        self._rank_cache: dict[int, int] = {}
        self._circuit_cache: tuple[int, ...] | None = None
        self._dual_cache: Matroid | None = None
        self._full_rank: int | None = None
        self.parent_elements: tuple[int, ...] | None = None

    # -- primitive oracle -------------------------------------------------

    def _rank_impl(self, mask: int) -> int:
        raise NotImplementedError

    def _check_mask(self, mask: int) -> int:
        if mask < 0 or mask & ~self.ground:
            raise InputError("subset has out-of-range elements")
        return mask

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def rank(self, mask: int) -> int:
        mask = self._check_mask(mask)
        r = self._rank_cache.get(mask)
        if r is None:
            r = self._rank_impl(mask)
            self._rank_cache[mask] = r
        return r

    def indep(self, mask: int) -> bool:
        return self.rank(mask) == mask.bit_count()

    @property
    def full_rank(self) -> int:
        if self._full_rank is None:
            self._full_rank = self.rank(self.ground)
        return self._full_rank

    # -- derived operations ----------------------------------------------

    def closure(self, mask: int) -> int:
        mask = self._check_mask(mask)
        r = self.rank(mask)
        out = mask
        rest = self.ground & ~mask
        for e in iter_bits(rest):
            if self.rank(mask | (1 << e)) == r:
                out |= 1 << e
        return out

    def is_closed(self, mask: int) -> bool:
        return self.closure(mask) == mask

    def loops(self) -> int:
        m = 0
        for e in range(self.n):
            if self.rank(1 << e) == 0:
                m |= 1 << e
        return m

    def has_loops(self) -> bool:
        return self.loops() != 0

    def is_basis(self, mask: int) -> bool:
        return mask.bit_count() == self.full_rank and self.indep(mask)

    def bases(self) -> Iterator[int]:
        for mask in subsets_of_size(self.ground, self.full_rank):
            if self.indep(mask):
                yield mask

    def circuits(self) -> tuple[int, ...]:
        """All circuits, in canonical order.

        A set enumerated in size-ascending order is a circuit iff it is
        dependent and contains no previously found circuit.
        """
        if self._circuit_cache is None:
            found: list[int] = []
            for k in range(1, self.full_rank + 2):
                for mask in subsets_of_size(self.ground, k):
                    if any(is_subset(c, mask) for c in found):
                        continue
                    if not self.indep(mask):
                        found.append(mask)
            self._circuit_cache = tuple(sorted(found, key=canonical_key))
        return self._circuit_cache

    def cocircuits(self) -> tuple[int, ...]:
        return self.dual().circuits()

    def dual(self) -> "Matroid":
        if self._dual_cache is None:
            self._dual_cache = DualMatroid(self)
        return self._dual_cache

    def restrict(self, keep: int) -> "RestrictionMatroid":
        return RestrictionMatroid(self, self._check_mask(keep))

    def contract(self, away: int) -> "ContractionMatroid":
        return ContractionMatroid(self, self._check_mask(away))

    def parallel_classes(self) -> tuple[int, ...]:
        """Rank-1 classes of non-loop elements, in canonical order."""
        rest = [e for e in range(self.n) if self.rank(1 << e) == 1]
        classes: list[int] = []
        seen = 0
        for e in rest:
            if seen & (1 << e):
                continue
            cls = 1 << e
            for f in rest:
                if f != e and self.rank((1 << e) | (1 << f)) == 1:
                    cls |= 1 << f
            classes.append(cls)
            seen |= cls
        return tuple(sorted(classes, key=canonical_key))

    def is_connected(self) -> bool:
        """True iff every pair of elements lies on a common circuit."""
        if self.n > TABLE_LIMIT:
            raise SizeGuardError("connectivity check is capped at n <= 16")
        if self.n <= 1:
            return True
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuits():
            es = elements_of(c)
            for f in es[1:]:
                parent[find(f)] = find(es[0])
        return len({find(e) for e in range(self.n)}) == 1

    def girth(self) -> int:
        """Size of a smallest circuit; error if the matroid is free."""
        for k in range(1, self.n + 1):
            for mask in subsets_of_size(self.ground, k):
                if not self.indep(mask):
                    return k
        raise MatroidError("free matroid has no circuit")

    def cogirth(self) -> int:
        """Size of a smallest cut; error if the dual is free (rank 0)."""
        try:
            return self.dual().girth()
        except MatroidError:
            raise MatroidError("rank-0 matroid has no cut") from None

    def independence_table(self) -> list[bool]:
        if self.n > TABLE_LIMIT:
            raise SizeGuardError("independence table is capped at n <= 16")
        return [self.indep(m) for m in range(1 << self.n)]


class OracleMatroid(Matroid):
    """Matroid defined by a raw independence callable."""

    def __init__(
        self,
        n: int,
        indep_fn: Callable[[int], bool],
        *,
        allow_loops: bool = False,
        known_binary: bool | None = None,
    ):
        super().__init__(n, allow_loops=allow_loops)
        self._fn = indep_fn
        self._indep_cache: dict[int, bool] = {}
        self.known_binary = known_binary

    def indep(self, mask: int) -> bool:
        mask = self._check_mask(mask)
        v = self._indep_cache.get(mask)
        if v is None:
            v = bool(self._fn(mask))
            self._indep_cache[mask] = v
        return v

    def _rank_impl(self, mask: int) -> int:
        # greedy over the independence oracle; correct by the exchange axiom
        cur = 0
        for e in iter_bits(mask):
            if self.indep(cur | (1 << e)):
                cur |= 1 << e
        return cur.bit_count()


class UniformMatroid(Matroid):
    """U_{r,n}: a set is independent iff it has at most r elements."""

    def __init__(self, r: int, n: int, *, allow_loops: bool = False):
        super().__init__(n, allow_loops=allow_loops)
        if not 0 <= r <= n:
            raise InputError("uniform matroid needs 0 <= r <= n")
        if r == 0 and n > 0 and not allow_loops:
            raise LoopError("U_{0,n} is all loops; pass allow_loops to build it")
        self.r = r
        # binary iff it has no U_{2,4} restriction worth the name
        self.known_binary = n <= 3 or r <= 1 or r >= n - 1

    def _rank_impl(self, mask: int) -> int:
        return min(self.r, mask.bit_count())


class PartitionMatroid(Matroid):
    """At most one element per class; classes partition the ground set."""

    def __init__(self, classes: Sequence[int], n: int):
        super().__init__(n)
        cover = 0
        for cls in classes:
            if cls == 0:
                raise InputError("partition matroid classes must be nonempty")
            if cls & cover:
                raise InputError("partition matroid classes must be disjoint")
            cover |= cls
        if cover != self.ground:
            raise InputError("partition matroid classes must cover the ground set")
        self.classes = tuple(classes)
        self.known_binary = True

    def _rank_impl(self, mask: int) -> int:
        return sum(1 for cls in self.classes if cls & mask)


class DualMatroid(Matroid):
    """Dual via the rank formula r*(X) = |X| + r(S-X) - r(S)."""

    def __init__(self, base: Matroid):
        super().__init__(base.n, allow_loops=True)
        self.base = base
        self.known_binary = base.known_binary

    def _rank_impl(self, mask: int) -> int:
        b = self.base
        return mask.bit_count() + b.rank(b.ground & ~mask) - b.full_rank

    def dual(self) -> Matroid:
        return self.base

    def is_connected(self) -> bool:
        # connectivity is invariant under duality
        return self.base.is_connected()


class RestrictionMatroid(Matroid):
    """Restriction to a subset, relabeled onto {0, ..., k-1}."""

    def __init__(self, base: Matroid, keep: int):
        super().__init__(keep.bit_count(), allow_loops=base.allow_loops)
        self.base = base
        self.parent_elements = tuple(elements_of(keep))
        self.known_binary = True if base.known_binary else None

    def expand(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << self.parent_elements[i]
        return out

    def _rank_impl(self, mask: int) -> int:
        return self.base.rank(self.expand(mask))


class ContractionMatroid(Matroid):
    """Contraction of an arbitrary set, relabeled onto {0, ..., k-1}.

    X is independent iff r(T u X) - r(T) = |X| in the parent; this extends
    the usual independent-set contraction and can create loops.
    """

    def __init__(self, base: Matroid, away: int):
        super().__init__((base.ground & ~away).bit_count(), allow_loops=True)
        self.base = base
        self.away = away
        self.base_rank = base.rank(away)
        self.parent_elements = tuple(elements_of(base.ground & ~away))
        self.known_binary = True if base.known_binary else None

    def expand(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << self.parent_elements[i]
        return out

    def _rank_impl(self, mask: int) -> int:
        return self.base.rank(self.away | self.expand(mask)) - self.base_rank


class DirectSumMatroid(Matroid):
    """Disjoint union; the second block is shifted past the first."""

    def __init__(self, first: Matroid, second: Matroid):
        super().__init__(
            first.n + second.n,
            allow_loops=first.allow_loops or second.allow_loops,
        )
        self.first = first
        self.second = second
        if first.known_binary and second.known_binary:
            self.known_binary = True
        elif first.known_binary is False or second.known_binary is False:
            self.known_binary = False
        else:
            self.known_binary = None

    def _rank_impl(self, mask: int) -> int:
        low = mask & self.first.ground
        high = mask >> self.first.n
        return self.first.rank(low) + self.second.rank(high)


def free_matroid(n: int) -> UniformMatroid:
    return UniformMatroid(n, n)


def direct_sum(first: Matroid, second: Matroid) -> DirectSumMatroid:
    return DirectSumMatroid(first, second)


def same_matroid(a: Matroid, b: Matroid) -> bool:
    """Equality of independence tables on a shared ground set."""
    if a.n != b.n:
        return False
    if a.n > TABLE_LIMIT:
        raise SizeGuardError("matroid comparison is capped at n <= 16")
    return all(a.indep(m) == b.indep(m) for m in range(1 << a.n))


def check_axioms(matroid: Matroid) -> None:
    """Opt-in exhaustive validation of the independence axioms (n <= 12).

    Raises MatroidError naming the first violated axiom. The exchange
    axiom is checked on all independent pairs with |Y| = |X| + 1, which is
    equivalent to the unrestricted form.
    """
    n = matroid.n
    if n > AXIOM_CHECK_LIMIT:
        raise SizeGuardError("axiom check is capped at n <= 12")
    universe = (1 << n) - 1
    indep = [matroid.indep(m) for m in range(1 << n)]
    if not indep[0]:
        raise MatroidError("axiom violation: empty set is dependent")
    for m in range(1 << n):
        if indep[m]:
            for e in iter_bits(m):
                if not indep[m ^ (1 << e)]:
                    raise MatroidError(
                        "axiom violation: independence is not downward closed"
                    )
    by_size: dict[int, list[int]] = {}
    for m in range(1 << n):
        if indep[m]:
            by_size.setdefault(m.bit_count(), []).append(m)
    for k, smaller in sorted(by_size.items()):
        larger = by_size.get(k + 1, [])
        for x in smaller:
            for y in larger:
                if any(indep[x | (1 << e)] for e in iter_bits(y & ~x)):
                    continue
                raise MatroidError("axiom violation: exchange fails")
