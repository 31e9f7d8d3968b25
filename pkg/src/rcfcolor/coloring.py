"""Colorings of matroid ground sets and the rainbow circuit-free machinery.

A coloring is a partition of {0, ..., n-1} into nonempty classes; it is
rainbow circuit-free (RCF) when no circuit picks up pairwise distinct
colors. Standard colorings peel off parallel classes of successive
contractions; for binary matroids they are exactly the RCF colorings with
rank-many colors, and the verdict functions certify the dichotomy behind
that fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterator, Sequence

from .binary import ensure_binary, find_u24_minor
from .core import (
    InputError,
    LoopError,
    Matroid,
    SizeGuardError,
    TheoremViolationError,
)
from .subsets import bit, canonical_key, elements_of, is_subset, iter_bits

__all__ = [
    "Coloring",
    "Verdict",
    "RAINBOW_CIRCUIT",
    "MONO_CUT",
    "RAINBOW_CUT",
    "MONO_CIRCUIT",
    "STANDARD_ORDER",
    "rainbow_circuit",
    "is_rainbow_circuit_free",
    "standard_coloring",
    "is_standard",
    "lemma_equiv_report",
    "theorem1_verdict",
    "theorem1_dual_verdict",
    "corollary_cut_class",
    "corollary_parallel_class",
    "nonstandard_coloring",
    "enumerate_rcf_colorings",
]

ENUMERATION_LIMIT = 14

RAINBOW_CIRCUIT = "rainbow-circuit"
MONO_CUT = "mono-cut"
RAINBOW_CUT = "rainbow-cut"
MONO_CIRCUIT = "mono-circuit"
STANDARD_ORDER = "standard-order"


@dataclass(frozen=True)
class Coloring:
    """Partition of {0, ..., n-1} into nonempty color classes (bitmasks)."""

    classes: tuple[int, ...]
    n: int

    def __post_init__(self):
        cover = 0
        for cls in self.classes:
            if cls == 0:
                raise InputError("color classes must be nonempty")
            if cls & cover:
                raise InputError("color classes must be disjoint")
            cover |= cls
        if cover != (1 << self.n) - 1:
            raise InputError("color classes must cover the ground set")

    @property
    def q(self) -> int:
        return len(self.classes)

    def class_of(self, e: int) -> int:
        for i, cls in enumerate(self.classes):
            if cls >> e & 1:
                return i
        raise InputError("element outside the ground set")

    def assignment(self) -> list[int]:
        out = [0] * self.n
        for i, cls in enumerate(self.classes):
            for e in iter_bits(cls):
                out[e] = i
        return out

    @classmethod
    def from_assignment(cls, colors: Sequence[int]) -> "Coloring":
        """Colors must form a contiguous range starting at 0."""
        n = len(colors)
        if n == 0:
            return cls((), 0)
        q = max(colors) + 1
        if min(colors) < 0 or set(colors) != set(range(q)):
            raise InputError("colors must form a contiguous range from 0")
        masks = [0] * q
        for e, c in enumerate(colors):
            masks[c] |= 1 << e
        return cls(tuple(masks), n)

    def canonical(self) -> "Coloring":
        """Classes reordered by smallest element."""
        return Coloring(tuple(sorted(self.classes, key=lambda m: m & -m)), self.n)

    def max_class_size(self) -> int:
        return max((cls.bit_count() for cls in self.classes), default=0)


@dataclass(frozen=True)
class Verdict:
    """Certificate returned by the theorem checkers."""

    kind: str
    subset: int | None = None
    class_index: int | None = None
    ordering: tuple[int, ...] | None = None


def _check_coloring(matroid: Matroid, coloring: Coloring) -> None:
    if coloring.n != matroid.n:
        raise InputError("coloring and matroid ground sets differ")


def _class_table(coloring: Coloring) -> list[int]:
    table = [0] * coloring.n
    for i, cls in enumerate(coloring.classes):
        for e in iter_bits(cls):
            table[e] = i
    return table


def _is_rainbow(mask: int, table: list[int]) -> bool:
    seen = 0
    for e in iter_bits(mask):
        b = 1 << table[e]
        if seen & b:
            return False
        seen |= b
    return True


def rainbow_circuit(matroid: Matroid, coloring: Coloring) -> int | None:
    """First rainbow circuit in canonical order, or None."""
    _check_coloring(matroid, coloring)
    table = _class_table(coloring)
    for c in matroid.circuits():
        if _is_rainbow(c, table):
            return c
    return None


def is_rainbow_circuit_free(
    matroid: Matroid, coloring: Coloring
) -> tuple[bool, int | None]:
    """(True, None) when RCF, else (False, offending circuit)."""
    c = rainbow_circuit(matroid, coloring)
    return (c is None, c)


def standard_coloring(
    matroid: Matroid, seed_order: Sequence[int] | None = None
) -> tuple[Coloring, Verdict]:
    """Peel parallel classes of successive contractions.

    Class i is the parallel class of the next seed in the contraction by
    the union of the earlier classes, i.e. the closure of prefix + seed
    minus the prefix. Exactly rank-many classes come out, and the
    construction order is a standard ordering certificate.
    """
    if matroid.has_loops():
        raise LoopError("standard colorings need a loopless matroid")
    n = matroid.n
    if seed_order is None:
        seeds: tuple[int, ...] = ()
    else:
        seeds = tuple(seed_order)
        if len(set(seeds)) != len(seeds) or any(not 0 <= e < n for e in seeds):
            raise InputError("seed order must list distinct ground-set elements")
    assigned = 0
    classes: list[int] = []
    while assigned != matroid.ground:
        # listed seeds first (skipping any swallowed by an earlier class),
        # then lowest-index uncolored
        seed = next(
            (e for e in seeds if not assigned >> e & 1),
            None,
        )
        if seed is None:
            seed = next(e for e in range(n) if not assigned >> e & 1)
        cls = matroid.closure(assigned | bit(seed)) & ~assigned
        classes.append(cls)
        assigned |= cls
    coloring = Coloring(tuple(classes), n)
    order = tuple(range(len(classes)))
    return coloring, Verdict(STANDARD_ORDER, ordering=order)


def is_standard(matroid: Matroid, coloring: Coloring) -> tuple[int, ...] | None:
    """A class ordering with all prefix unions closed, or None.

    Only defined for exactly rank-many classes; backtracks over which
    class comes next, classes tried in index order.
    """
    _check_coloring(matroid, coloring)
    if coloring.q != matroid.full_rank:
        raise InputError("standardness needs exactly rank-many classes")
    classes = coloring.classes
    q = len(classes)
    order: list[int] = []
    dead: set[int] = set()

    def extend(used: int, prefix: int) -> bool:
        if len(order) == q:
            return True
        if used in dead:
            return False
        for i in range(q):
            if used >> i & 1:
                continue
            u = prefix | classes[i]
            if matroid.is_closed(u):
                order.append(i)
                if extend(used | 1 << i, u):
                    return True
                order.pop()
        dead.add(used)
        return False

    if extend(0, 0):
        return tuple(order)
    return None


def _is_cut_of_restriction(matroid: Matroid, ground: int, cut: int) -> bool:
    """Is `cut` a cocircuit of the restriction to `ground`?

    Cocircuits are complements of hyperplanes: the rest must have rank one
    less and be closed within the restriction.
    """
    rest = ground & ~cut
    if matroid.rank(rest) != matroid.rank(ground) - 1:
        return False
    r = matroid.rank(rest)
    for e in iter_bits(cut):
        if matroid.rank(rest | 1 << e) == r:
            return False
    return True


def lemma_equiv_report(
    matroid: Matroid, coloring: Coloring
) -> tuple[bool, bool, bool]:
    """The three standardness conditions, each tried over all orderings.

    (i)  some ordering makes every class a cut of the prefix restriction;
    (ii) the coloring is RCF and some ordering has prefix ranks 1..r;
    (iii) some ordering keeps every prefix union closed.
    """
    _check_coloring(matroid, coloring)
    if coloring.q != matroid.full_rank:
        raise InputError("the equivalence is about exactly rank-many classes")
    classes = coloring.classes
    q = len(classes)

    def exists_order(test) -> bool:
        dead: set[int] = set()

        def extend(used: int, prefix: int, depth: int) -> bool:
            if depth == q:
                return True
            if used in dead:
                return False
            for i in range(q):
                if used >> i & 1:
                    continue
                u = prefix | classes[i]
                if test(u, classes[i], depth):
                    if extend(used | 1 << i, u, depth + 1):
                        return True
            dead.add(used)
            return False

        return extend(0, 0, 0)

    cond1 = exists_order(
        lambda union, cls, depth: _is_cut_of_restriction(matroid, union, cls)
    )
    rcf = rainbow_circuit(matroid, coloring) is None
    cond2 = rcf and exists_order(
        lambda union, cls, depth: matroid.rank(union) == depth + 1
    )
    cond3 = exists_order(
        lambda union, cls, depth: matroid.is_closed(union)
    )
    return (cond1, cond2, cond3)


def theorem1_verdict(matroid: Matroid, coloring: Coloring) -> Verdict:
    """Rainbow circuit or monochromatic cut for exactly-rank colorings.

    Searches for a rainbow circuit first, then for a cut inside a single
    class, both in canonical order. Failing both is a theorem violation
    for a binary matroid, so it raises.
    """
    _check_coloring(matroid, coloring)
    ensure_binary(matroid)
    if coloring.q != matroid.full_rank:
        raise InputError("verdict needs exactly rank-many colors")
    c = rainbow_circuit(matroid, coloring)
    if c is not None:
        return Verdict(RAINBOW_CIRCUIT, subset=c)
    for cut in matroid.cocircuits():
        for i, cls in enumerate(coloring.classes):
            if is_subset(cut, cls):
                return Verdict(MONO_CUT, subset=cut, class_index=i)
    raise TheoremViolationError(
        "no rainbow circuit and no monochromatic cut in a binary matroid"
    )


def theorem1_dual_verdict(matroid: Matroid, coloring: Coloring) -> Verdict:
    """Rainbow cut or monochromatic circuit for (n - r)-color colorings."""
    _check_coloring(matroid, coloring)
    ensure_binary(matroid)
    if coloring.q != matroid.n - matroid.full_rank:
        raise InputError("dual verdict needs exactly n - r colors")
    v = theorem1_verdict(matroid.dual(), coloring)
    if v.kind == RAINBOW_CIRCUIT:
        return Verdict(RAINBOW_CUT, subset=v.subset)
    return Verdict(MONO_CIRCUIT, subset=v.subset, class_index=v.class_index)


def corollary_cut_class(matroid: Matroid, coloring: Coloring) -> int:
    """Index of a class that is itself a cut, for RCF rank-many colorings."""
    _check_coloring(matroid, coloring)
    ensure_binary(matroid)
    if coloring.q != matroid.full_rank:
        raise InputError("needs exactly rank-many colors")
    rc = rainbow_circuit(matroid, coloring)
    if rc is not None:
        raise InputError("coloring has a rainbow circuit")
    cuts = set(matroid.cocircuits())
    for i, cls in enumerate(coloring.classes):
        if cls in cuts:
            return i
    raise TheoremViolationError("no color class is a cut")


def corollary_parallel_class(matroid: Matroid, coloring: Coloring) -> int:
    """Index of a class that is a full parallel class (a rank-1 flat)."""
    _check_coloring(matroid, coloring)
    ensure_binary(matroid)
    if coloring.q != matroid.full_rank:
        raise InputError("needs exactly rank-many colors")
    rc = rainbow_circuit(matroid, coloring)
    if rc is not None:
        raise InputError("coloring has a rainbow circuit")
    for i, cls in enumerate(coloring.classes):
        if matroid.rank(cls) == 1 and matroid.is_closed(cls):
            return i
    raise TheoremViolationError("no color class is a parallel class")


def nonstandard_coloring(matroid: Matroid) -> Coloring:
    """A rank-many RCF coloring that is not standard, for non-binary input.

    Built from a U_{2,4} witness (F, T): with G the closure of T in M/F,
    the restriction of M/F to G is a rank-2 matroid with q >= 4 parallel
    classes P_1..P_q. Coloring G as P_1 u P_2 against P_3 u ... u P_q kills
    every rainbow circuit inside G while leaving both classes of rank 2, so
    no class ordering can have prefix rank 1. Everything outside G gets
    fresh colors from standard colorings of M/F past G and of M|F.
    """
    if matroid.has_loops():
        raise LoopError("needs a loopless matroid")
    witness = find_u24_minor(matroid)
    if witness is None:
        raise InputError("matroid is binary; every RCF coloring is standard")
    flat, four = witness.flat, witness.elements
    base = matroid.rank(flat)
    # closure of the witness quad inside the contraction by the flat
    g_mask = four
    for e in iter_bits(matroid.ground & ~(flat | four)):
        if matroid.rank(flat | four | bit(e)) == matroid.rank(flat | four):
            g_mask |= bit(e)
    # parallel classes of (M/F)|G, grouped by contraction rank of pairs
    remaining = g_mask
    parallel: list[int] = []
    while remaining:
        e = (remaining & -remaining).bit_length() - 1
        cls = bit(e)
        for f in iter_bits(remaining & ~cls):
            if matroid.rank(flat | bit(e) | bit(f)) - base == 1:
                cls |= bit(f)
        parallel.append(cls)
        remaining &= ~cls
    parallel.sort(key=canonical_key)
    classes = [parallel[0] | parallel[1], 0]
    for p in parallel[2:]:
        classes[1] |= p
    # standard extension of M/F beyond G; every prefix stays a flat of M
    assigned = flat | g_mask
    while assigned != matroid.ground:
        seed = next(iter_bits(matroid.ground & ~assigned))
        cls = matroid.closure(assigned | bit(seed)) & ~assigned
        classes.append(cls)
        assigned |= cls
    # standard coloring of M|F, closures taken within the flat
    prefix = 0
    while prefix != flat:
        seed = next(iter_bits(flat & ~prefix))
        cls = (matroid.closure(prefix | bit(seed)) & flat) & ~prefix
        classes.append(cls)
        prefix |= cls
    coloring = Coloring(tuple(classes), matroid.n).canonical()
    if coloring.q != matroid.full_rank:
        raise TheoremViolationError("nonstandard construction missed the rank")
    return coloring


def enumerate_rcf_colorings(
    matroid: Matroid,
    max_class_size: int,
    exact_colors: int | None = None,
) -> Iterator[Coloring]:
    """All RCF colorings with bounded class sizes, in canonical order.

    Elements are assigned in ascending order, blocks in restricted-growth
    order; a branch dies as soon as a fully assigned circuit is rainbow.
    """
    n = matroid.n
    if n > ENUMERATION_LIMIT:
        raise SizeGuardError("coloring enumeration is capped at n <= 14")
    if max_class_size < 1:
        raise InputError("class size bound must be positive")
    if n == 0:
        if exact_colors in (None, 0):
            yield Coloring((), 0)
        return
    # circuits bucketed by their largest element, as element lists
    by_last: list[list[list[int]]] = [[] for _ in range(n)]
    for c in matroid.circuits():
        by_last[c.bit_length() - 1].append(elements_of(c))
    table = [0] * n
    blocks: list[int] = []

    def rec(e: int) -> Iterator[Coloring]:
        if e == n:
            if exact_colors is None or len(blocks) == exact_colors:
                yield Coloring(tuple(blocks), n)
            return
        remaining = n - e
        b = 1 << e
        limit = len(blocks)
        open_new = exact_colors is None or len(blocks) < exact_colors
        for bi in range(limit + 1):
            if bi == limit:
                if not open_new:
                    continue
                blocks.append(b)
            else:
                if exact_colors is not None and len(blocks) + remaining - 1 < exact_colors:
                    continue
                if blocks[bi].bit_count() >= max_class_size:
                    continue
                blocks[bi] |= b
            table[e] = bi
            ok = True
            for circuit in by_last[e]:
                seen = 0
                for x in circuit:
                    cb = 1 << table[x]
                    if seen & cb:
                        break
                    seen |= cb
                else:
                    ok = False
                if not ok:
                    break
            if ok:
                yield from rec(e + 1)
            if bi == limit:
                blocks.pop()
            else:
                blocks[bi] &= ~b

    yield from rec(0)
