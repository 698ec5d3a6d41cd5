"""Integer partitions, set partitions and the total order used everywhere else.

Partitions of equal size are ordered so that the one with the larger leading
part comes first, i.e. (4) < (3,1) < (2,2).  The empty partition stands for
the constant function 1 and sorts before everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator


class EmptyInputError(ValueError):
    """Raised when an enumeration is asked for nothing."""


@dataclass(frozen=True)
class IntegerPartition:
    """A partition of n into nonincreasing positive parts (possibly empty)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be nonincreasing: %r" % (parts,))

    @classmethod
    def of(cls, *parts: int) -> "IntegerPartition":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_alpha(cls, alpha) -> "IntegerPartition":
        parts = []
        for size, count in enumerate(alpha, start=1):
            parts.extend([size] * count)
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "IntegerPartition":
        """Parse a comma-separated part list, e.g. "2,2,1"; "" is empty."""
        text = text.strip()
        if not text:
            return cls(())
        return cls.of(*(int(tok) for tok in text.split(",")))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def l(self) -> int:
        return len(self.parts)

    @property
    def alpha(self) -> tuple[int, ...]:
        """Multiplicity vector (alpha_1, ..., alpha_n)."""
        counts = [0] * self.n
        for p in self.parts:
            counts[p - 1] += 1
        return tuple(counts)

    @property
    def alpha_1(self) -> int:
        """Number of singleton parts."""
        return sum(1 for p in self.parts if p == 1)

    @property
    def min_part(self) -> int:
        return self.parts[-1] if self.parts else 0

    def sort_key(self):
        # Larger leading part ranks smaller within equal size.
        return (self.n, tuple(-p for p in self.parts))

    def concat(self, other: "IntegerPartition") -> "IntegerPartition":
        return IntegerPartition.of(*(self.parts + other.parts))

    def drop_ones(self) -> "IntegerPartition":
        return IntegerPartition(tuple(p for p in self.parts if p > 1))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)


EMPTY = IntegerPartition(())


def partition_order(a: IntegerPartition, b: IntegerPartition) -> int:
    """Total order on partitions; returns -1, 0 or 1."""
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..l} into blocks ordered by their minima."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks or any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        elems = [e for b in blocks for e in b]
        l = len(elems)
        if sorted(elems) != list(range(1, l + 1)):
            raise ValueError("blocks must partition {1..l}: %r" % (blocks,))
        mins = [b[0] for b in blocks]
        if mins != sorted(mins):
            raise ValueError("blocks must be ordered by minima: %r" % (blocks,))

    @property
    def d(self) -> int:
        return len(self.blocks)

    @property
    def l(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_sums(self, parts: tuple[int, ...]) -> tuple[int, ...]:
        """Sum the given part values over each block (1-based indices)."""
        return tuple(sum(parts[i - 1] for i in b) for b in self.blocks)

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def _partition_tuples(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[IntegerPartition, ...]:
    """All partitions of n, in the canonical order."""
    if n < 1:
        raise EmptyInputError("n must be >= 1, got %r" % (n,))
    parts = [IntegerPartition(t) for t in _partition_tuples(n, n)]
    return tuple(sorted(parts, key=IntegerPartition.sort_key))


@lru_cache(maxsize=None)
def enumerate_partitions_min2(n: int) -> tuple[IntegerPartition, ...]:
    """Partitions of n with every part >= 2, in canonical order."""
    if n < 1:
        raise EmptyInputError("n must be >= 1, got %r" % (n,))
    out = [p for p in enumerate_partitions(n) if p.min_part >= 2]
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_set_partitions(l: int, d: int) -> tuple[SetPartition, ...]:
    """All partitions of {1..l} into exactly d min-ordered blocks."""
    if l < 1:
        raise EmptyInputError("l must be >= 1, got %r" % (l,))
    if d < 1 or d > l:
        raise ValueError("need 1 <= d <= l, got d=%r l=%r" % (d, l))

    results: list[SetPartition] = []

    def assign(e: int, blocks: list[list[int]]):
        if e > l:
            if len(blocks) == d:
                results.append(SetPartition(tuple(tuple(b) for b in blocks)))
            return
        # Opening a new block keeps blocks ordered by minima automatically.
        remaining = l - e + 1
        for b in blocks:
            if len(blocks) + remaining - 1 >= d:
                b.append(e)
                assign(e + 1, blocks)
                b.pop()
        if len(blocks) < d:
            blocks.append([e])
            assign(e + 1, blocks)
            blocks.pop()

    assign(1, [])
    return tuple(results)


def all_set_partitions(l: int) -> Iterator[SetPartition]:
    for d in range(1, l + 1):
        yield from enumerate_set_partitions(l, d)


def multinomial_constant(eta: IntegerPartition) -> Fraction:
    """n! / (eta_1! ... eta_l! alpha_1! ... alpha_n!), an exact integer."""
    denom = 1
    for p in eta.parts:
        denom *= factorial(p)
    for a in eta.alpha:
        denom *= factorial(a)
    return Fraction(factorial(eta.n), denom)
