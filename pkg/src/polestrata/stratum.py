"""Strata of meromorphic k-differentials with poles of higher order.

A stratum is described by the order ``k`` of the differential, the orders of
its conical singularities (zeros of any order and poles of order < k) and the
orders of its poles of higher order (order >= k).  Pole orders are stored as
positive integers ``b``; the signed singularity pattern lists them as ``-b``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from collections.abc import Iterable, Iterator
from itertools import groupby
from math import gcd

from .errors import MalformedStratum, UnsupportedStratum

__all__ = [
    "Nonemptiness",
    "Stratum",
    "genus",
    "is_nonempty",
    "iter_strata",
    "render_entries",
]


class Nonemptiness(enum.Enum):
    NONEMPTY = "nonempty"
    EMPTY = "empty"
    UNKNOWN = "unknown"


# Exceptional patterns of quadratic differentials without poles of higher order,
# compared as multisets.
_EMPTY_QUADRATIC_PATTERNS = (
    (-1, 1),
    (1, 3),
)


@dataclass(frozen=True)
class Stratum:
    """Singularity pattern ``H^k(a_1..a_n, -b_1..-b_p)``.

    ``zeros`` keeps conical-singularity orders in input order and ``poles``
    keeps the (positive) orders of poles of higher order in input order.
    Singularity ``i`` refers to ``zeros[i]`` for ``i < n`` and to
    ``-poles[i - n]`` otherwise.
    """

    k: int
    zeros: tuple[int, ...]
    poles: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "zeros", tuple(int(a) for a in self.zeros))
        object.__setattr__(self, "poles", tuple(int(b) for b in self.poles))
        if not isinstance(self.k, int) or self.k < 1:
            raise MalformedStratum(f"order k must be a positive integer, got {self.k!r}")
        for a in self.zeros:
            if a == 0:
                raise MalformedStratum("marked points (order 0) are not allowed")
            if a <= -self.k:
                raise MalformedStratum(
                    f"conical singularity of order {a} is a pole of higher order for k={self.k}"
                )
        for b in self.poles:
            if b < self.k:
                raise MalformedStratum(
                    f"pole of order {b} < k={self.k} is a conical singularity, not a pole"
                )
        total = sum(self.zeros) - sum(self.poles)
        if total % (2 * self.k):
            raise MalformedStratum(
                f"degree sum {total} is not divisible by 2k={2 * self.k}"
            )
        if total // (2 * self.k) + 1 < 0:
            raise MalformedStratum(f"degree sum {total} gives a negative genus")

    @property
    def n(self) -> int:
        return len(self.zeros)

    @property
    def p(self) -> int:
        return len(self.poles)

    @property
    def genus(self) -> int:
        return (sum(self.zeros) - sum(self.poles)) // (2 * self.k) + 1

    @property
    def orders(self) -> tuple[int, ...]:
        """Signed singularity pattern, zeros first then ``-b`` for each pole."""
        return self.zeros + tuple(-b for b in self.poles)

    def is_conical(self, index: int) -> bool:
        return index < self.n

    def canonical(self) -> Stratum:
        """Same stratum with both lists sorted in decreasing order."""
        return Stratum(
            self.k,
            tuple(sorted(self.zeros, reverse=True)),
            tuple(sorted(self.poles)),
        )

    def pattern_key(self) -> tuple:
        c = self.canonical()
        return (c.k, c.zeros, c.poles)

    def with_extra_poles(self, order: int, count: int) -> Stratum:
        return Stratum(self.k, self.zeros, self.poles + (order,) * count)

    def pattern_gcd(self) -> int:
        return reduce(gcd, (abs(x) for x in self.orders), 0)

    def require_conical(self) -> None:
        if self.n == 0:
            raise UnsupportedStratum(f"{self} has no conical singularity")

    def __str__(self) -> str:
        return f"H^{self.k}({render_entries(self.orders)})"


def render_entries(orders) -> str:
    """Compact notation for a sequence of orders, grouping consecutive repeats."""
    parts = []
    for value, group in groupby(orders):
        count = len(list(group))
        parts.append(f"{value}^{count}" if count > 1 else f"{value}")
    return ",".join(parts)


def genus(stratum: Stratum) -> int:
    """Genus ``g`` with ``sum(a) - sum(b) = k(2g - 2)``."""
    return stratum.genus


def is_nonempty(stratum: Stratum) -> Nonemptiness:
    """Decide whether some differential realizes the singularity pattern.

    Known criteria: complete for ``k = 1`` and ``k = 2``; for ``k >= 3`` only
    genus zero is decided.
    """
    k, p = stratum.k, stratum.p
    if k == 1:
        if p == 0 or sum(stratum.poles) > 1:
            return Nonemptiness.NONEMPTY
        return Nonemptiness.EMPTY
    if k == 2:
        if p >= 1:
            return Nonemptiness.NONEMPTY
        if tuple(sorted(stratum.zeros)) in _EMPTY_QUADRATIC_PATTERNS:
            return Nonemptiness.EMPTY
        return Nonemptiness.NONEMPTY
    if stratum.genus == 0:
        return Nonemptiness.NONEMPTY
    return Nonemptiness.UNKNOWN


def _partitions(total: int, parts: int, smallest: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples of ``parts`` integers >= smallest summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts * smallest:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total - (parts - 1) * smallest, smallest - 1, -1):
        for rest in _partitions(total - first, parts - 1, smallest):
            if rest[0] <= first:
                yield (first,) + rest


def _conical_patterns(k: int, total: int, max_count: int) -> Iterator[tuple[int, ...]]:
    """Multisets of conical orders (nonzero, > -k) with the given sum, 1..max_count entries."""
    negatives = list(range(-1, -k, -1))

    def negative_parts(count_left: int, start: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for idx in range(start, len(negatives)):
            if count_left == 0:
                break
            for rest in negative_parts(count_left - 1, idx):
                yield (negatives[idx],) + rest

    for neg in negative_parts(max_count, 0):
        positive_total = total - sum(neg)
        for count in range(0, max_count - len(neg) + 1):
            if count + len(neg) == 0:
                continue
            for pos in _partitions(positive_total, count, 1):
                yield pos + neg


def iter_strata(
    k: int,
    max_pole_sum: int,
    genera: Iterable[int] = (0,),
    max_singularities: int = 8,
    min_poles: int = 1,
) -> Iterator[Stratum]:
    """Every stratum (in canonical form) with pole-order sum <= max_pole_sum.

    Patterns have at least one conical singularity, at least ``min_poles``
    poles of higher order and at most ``max_singularities`` entries in total.
    """
    seen = set()
    for g in genera:
        for pole_sum in range(0, max_pole_sum + 1):
            for p in range(min_poles, max_singularities):
                for poles in _partitions(pole_sum, p, k):
                    zero_total = k * (2 * g - 2) + pole_sum
                    for zeros in _conical_patterns(k, zero_total, max_singularities - p):
                        stratum = Stratum(k, zeros, tuple(sorted(poles))).canonical()
                        key = stratum.pattern_key()
                        if key not in seen:
                            seen.add(key)
                            yield stratum
