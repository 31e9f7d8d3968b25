"""Bitmask subset utilities shared by the whole package.

Ground sets are always {0, ..., n-1}; a subset is an int whose bit i stands
for element i. The canonical order on subsets is (size, numeric mask value),
which fixes every enumeration output deterministically.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

__all__ = [
    "bit",
    "mask_of",
    "elements_of",
    "iter_bits",
    "is_subset",
    "canonical_key",
    "subsets_of_size",
    "all_subsets",
    "set_partitions",
]


def bit(e: int) -> int:
    return 1 << e


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    """Sorted element list of a mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def canonical_key(mask: int) -> tuple[int, int]:
    """Sort key implementing the canonical subset order."""
    return (mask.bit_count(), mask)


def _spread(compact: int, positions: Sequence[int]) -> int:
    m = 0
    for i in iter_bits(compact):
        m |= 1 << positions[i]
    return m


def subsets_of_size(universe: int, k: int) -> Iterator[int]:
    """All k-subsets of a universe mask, ascending by numeric value."""
    if k < 0 or k > universe.bit_count():
        return
    if k == 0:
        yield 0
        return
    positions = elements_of(universe)
    # Gosper's hack enumerates k-subsets of a contiguous range in numeric
    # order; spreading onto the universe positions preserves that order.
    compact = (1 << k) - 1
    limit = 1 << len(positions)
    while compact < limit:
        yield _spread(compact, positions)
        c = compact & -compact
        r = compact + c
        compact = (((r ^ compact) >> 2) // c) | r


def all_subsets(universe: int, *, include_empty: bool = True) -> Iterator[int]:
    """All subsets of a universe mask in canonical order."""
    n = universe.bit_count()
    for k in range(0 if include_empty else 1, n + 1):
        yield from subsets_of_size(universe, k)


def set_partitions(
    items: Sequence[int],
    *,
    exact_blocks: int | None = None,
    max_block_size: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Partitions of the given elements into blocks, as tuples of masks.

    Blocks appear ordered by their smallest element (restricted-growth
    order), so the enumeration is deterministic.
    """
    items = list(items)
    total = len(items)
    if exact_blocks is not None and exact_blocks > total:
        return
    if total == 0:
        if exact_blocks in (None, 0):
            yield ()
        return
    blocks: list[int] = []

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == total:
            if exact_blocks is None or len(blocks) == exact_blocks:
                yield tuple(blocks)
            return
        remaining = total - i
        b = 1 << items[i]
        if exact_blocks is None or len(blocks) + remaining - 1 >= exact_blocks:
            for bi in range(len(blocks)):
                if (
                    max_block_size is not None
                    and blocks[bi].bit_count() >= max_block_size
                ):
                    continue
                blocks[bi] |= b
                yield from rec(i + 1)
                blocks[bi] &= ~b
        if exact_blocks is None or len(blocks) < exact_blocks:
            blocks.append(b)
            yield from rec(i + 1)
            blocks.pop()

    yield from rec(0)
