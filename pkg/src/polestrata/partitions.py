"""Partitions of a multiset into a fixed number of unlabelled blocks."""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Sequence

__all__ = ["multiset_partitions"]


def _sub_vectors(
    remaining: Sequence[int], bound: Sequence[int] | None
) -> Iterator[tuple[int, ...]]:
    """Vectors ``0 <= b <= remaining`` with ``b <= bound`` (lex), in decreasing lex order."""
    size = len(remaining)
    current = [0] * size

    def rec(pos: int, tight: bool) -> Iterator[tuple[int, ...]]:
        if pos == size:
            yield tuple(current)
            return
        top = remaining[pos]
        if tight:
            top = min(top, bound[pos])
        for c in range(top, -1, -1):
            current[pos] = c
            yield from rec(pos + 1, tight and c == bound[pos])
        current[pos] = 0

    yield from rec(0, bound is not None)


def multiset_partitions(
    items: Iterable[int],
    blocks: int,
    accept: Callable[[tuple[int, ...]], bool] | None = None,
    required: Callable[[int], bool] | None = None,
) -> Iterator[list[tuple[int, ...]]]:
    """Yield each partition of the multiset ``items`` into exactly ``blocks`` blocks once.

    Blocks are sorted tuples of items; a partition is yielded as a list of
    blocks.  ``accept`` filters individual blocks.  ``required`` marks items of
    which every block needs at least one; it is used for pruning only.
    """
    counts = Counter(items)
    values = sorted(counts)
    total = [counts[v] for v in values]
    if blocks < 1 or blocks > sum(total):
        return
    marked = [bool(required and required(v)) for v in values]

    def as_block(vector: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(v for v, c in zip(values, vector) for _ in range(c))

    def rec(
        remaining: list[int], prev: tuple[int, ...] | None, left: int, acc: list
    ) -> Iterator[list[tuple[int, ...]]]:
        if left == 1:
            vector = tuple(remaining)
            if prev is not None and vector > prev:
                return
            if required and not any(c and m for c, m in zip(vector, marked)):
                return
            block = as_block(vector)
            if accept is None or accept(block):
                yield acc + [block]
            return
        if required and sum(c for c, m in zip(remaining, marked) if m) < left:
            return
        for vector in _sub_vectors(remaining, prev):
            if not any(vector):
                continue
            if required and not any(c and m for c, m in zip(vector, marked)):
                continue
            rest = [r - c for r, c in zip(remaining, vector)]
            if sum(rest) < left - 1:
                continue
            block = as_block(vector)
            if accept is not None and not accept(block):
                continue
            yield from rec(rest, vector, left - 1, acc + [block])

    yield from rec(total, None, blocks, [])
