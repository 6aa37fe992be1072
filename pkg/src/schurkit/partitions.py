"""Partitions, dominance orders and the block-average construction.

Partitions are stored canonically (non-increasing, no trailing zeros) as
tuple subclasses, so they hash, compare and sort like plain tuples.
Operations that depend on the rank ``d`` pad with zeros on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    pass


class NonMonotone(PartitionError):
    pass


class Negative(PartitionError):
    pass


class WeightMismatch(PartitionError):
    pass


class ZeroPartition(PartitionError):
    pass


class LengthMismatch(PartitionError):
    pass


class Partition(tuple):
    """A finite non-increasing sequence of nonnegative integers.

    Trailing zeros are dropped, so ``Partition([2, 1, 0]) == Partition([2, 1])``.
    The empty tuple is the zero partition.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        for i, p in enumerate(parts):
            if p < 0:
                raise Negative(f"negative part {p} at position {i}")
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise NonMonotone(f"parts increase at position {i}: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def padded(self, d: int) -> tuple[int, ...]:
        if len(self) > d:
            raise LengthMismatch(f"{self} has more than {d} parts")
        return tuple(self) + (0,) * (d - len(self))


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def format_partition(p: Sequence[int]) -> str:
    """Literal text form: ``2,1`` or ``0`` for the zero partition."""
    parts = [x for x in p]
    while parts and parts[-1] == 0:
        parts.pop()
    return ",".join(str(x) for x in parts) if parts else "0"


def format_composition(L: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in L) + "]"


def weight(p: Sequence[int]) -> int:
    return sum(p)


def add(p: Sequence[int], q: Sequence[int]) -> Partition:
    """Componentwise sum of two partitions."""
    n = max(len(p), len(q))
    p = tuple(p) + (0,) * (n - len(p))
    q = tuple(q) + (0,) * (n - len(q))
    return Partition(x + y for x, y in zip(p, q))


def scale(p: Sequence[int], k: int) -> Partition:
    return Partition(k * x for x in p)


def subtract(p: Sequence[int], q: Sequence[int]) -> Partition | None:
    """Componentwise ``p - q``, or None if the result is not a partition."""
    n = max(len(p), len(q))
    p = tuple(p) + (0,) * (n - len(p))
    q = tuple(q) + (0,) * (n - len(q))
    diff = [x - y for x, y in zip(p, q)]
    if any(x < 0 for x in diff):
        return None
    if any(diff[i] < diff[i + 1] for i in range(n - 1)):
        return None
    return Partition(diff)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Young-diagram containment ``inner ⊆ outer``."""
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def partitions_of(n: int, max_length: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` with at most ``max_length`` parts, in descending lex order."""
    if max_part is None:
        max_part = n

    def rec(remaining, length, cap):
        if remaining == 0:
            yield ()
            return
        if length == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            # the rest must fit in length-1 parts bounded by first
            if first * length < remaining:
                break
            for rest in rec(remaining - first, length - 1, first):
                yield (first,) + rest

    for parts in rec(n, max_length, max_part):
        yield Partition(parts)


@dataclass(frozen=True)
class RankContext:
    """Rank ``d`` of the bundle together with ``mu = lcm(1..d)``."""

    d: int
    mu: int = field(init=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"rank must be positive, got {self.d}")
        object.__setattr__(self, "mu", math.lcm(*range(1, self.d + 1)))

    def check(self, p: Sequence[int]) -> None:
        if len(Partition(p)) > self.d:
            raise LengthMismatch(f"{format_partition(p)} has more than {self.d} parts")


class Composition(tuple):
    """Ordered sequence of positive integers (an element of L(d))."""

    def __new__(cls, blocks: Iterable[int]):
        blocks = tuple(int(x) for x in blocks)
        if not blocks or any(x < 1 for x in blocks):
            raise ValueError(f"composition blocks must be positive: {blocks}")
        return super().__new__(cls, blocks)

    @property
    def total(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Composition({tuple(self)!r})"

    def __str__(self):
        return format_composition(self)


def _pad(p: Sequence[int], d: int) -> tuple[int, ...]:
    p = tuple(p)
    while p and p[-1] == 0:
        p = p[:-1]
    if len(p) > d:
        raise LengthMismatch(f"{format_partition(p)} has more than {d} parts")
    return p + (0,) * (d - len(p))


def dominated_eq(b: Sequence[int], a: Sequence[int], d: int) -> bool:
    """Equal-weight dominance ``b ⪯ a`` by prefix sums."""
    b, a = _pad(b, d), _pad(a, d)
    if sum(b) != sum(a):
        raise WeightMismatch(f"weights differ: |b|={sum(b)}, |a|={sum(a)}")
    sb = sa = 0
    for k in range(d - 1):
        sb += b[k]
        sa += a[k]
        if sb > sa:
            return False
    return True


def dominated_ext(b: Sequence[int], a: Sequence[int], d: int) -> bool:
    """Dominance extended to unequal weights: ``|a|·b ⪯ |b|·a``."""
    wa, wb = sum(a), sum(b)
    if wa == 0 or wb == 0:
        raise ZeroPartition("extended dominance is defined for non-zero partitions only")
    return dominated_eq(scale(b, wa), scale(a, wb), d)


def in_Z(b: Sequence[int], a: Sequence[int], d: int) -> bool:
    """Membership of ``b`` in Z(a), the non-zero partitions dominated by ``a``."""
    if sum(a) == 0:
        raise ZeroPartition("Z(a) is defined for non-zero a")
    if sum(b) == 0:
        return False
    return dominated_ext(b, a, d)


def concat(b: Sequence, c: Sequence) -> tuple:
    return tuple(b) + tuple(c)


def compositions(d: int) -> list[Composition]:
    """All 2**(d-1) compositions of ``d``, lexicographic by blocks."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")

    def rec(n):
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for rest in rec(n - first):
                yield (first,) + rest

    return [Composition(c) for c in rec(d)]


def block_average(L: Sequence[int], a: Sequence[int], d: int) -> tuple[Fraction, ...]:
    """Replace each consecutive block of ``a`` (sizes from ``L``) by its average."""
    if sum(L) != d:
        raise LengthMismatch(f"composition {format_composition(L)} does not sum to {d}")
    a = _pad(a, d)
    out = []
    start = 0
    for size in L:
        block = a[start:start + size]
        avg = Fraction(sum(block), size)
        out.extend([avg] * size)
        start += size
    return tuple(out)


def generator_map(a: Sequence[int], ctx: RankContext) -> dict[Composition, Partition]:
    """``L -> v(L, mu·a)`` for every composition of ``d``, in composition order."""
    a = Partition(a)
    if not a:
        raise ZeroPartition("generators need a non-zero partition")
    ctx.check(a)
    scaled = scale(a, ctx.mu)
    out = {}
    for L in compositions(ctx.d):
        v = block_average(L, scaled, ctx.d)
        # integral because every block length divides mu
        assert all(x.denominator == 1 for x in v), v
        out[L] = Partition(int(x) for x in v)
    return out


def generators(a: Sequence[int], ctx: RankContext) -> frozenset[Partition]:
    return frozenset(generator_map(a, ctx).values())


@dataclass(frozen=True)
class FlagSignature:
    s: tuple[int, ...]
    exponents: tuple[int, ...]

    def partition(self) -> Partition:
        """Rebuild the partition, constant on each block ``(s[i-1], s[i]]``."""
        parts = []
        for i in range(1, len(self.s)):
            parts.extend([self.exponents[i - 1]] * (self.s[i] - self.s[i - 1]))
        return Partition(parts)


def flag_signature(a: Sequence[int], d: int) -> FlagSignature:
    """Positions of strict descent of ``a`` and the matching line-bundle exponents."""
    p = _pad(a, d)
    s = [0] + [j for j in range(1, d) if p[j - 1] > p[j]] + [d]
    exponents = tuple(p[j - 1] for j in s[1:])
    return FlagSignature(tuple(s), exponents)
