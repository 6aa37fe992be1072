"""Littlewood-Richardson coefficients and Schur-functor tensor products.

The coefficient ``c^b_{a,c}`` counts column-strict fillings of the skew
shape ``b/a`` with content ``c`` whose reverse reading word (rows right to
left, top to bottom) is a lattice word.  Products are truncated at the rank
``d``: a Schur functor with more than ``d`` rows vanishes on a rank-``d``
bundle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .partitions import (
    Partition,
    RankContext,
    add,
    contains,
    dominated_ext,
    format_partition,
    partitions_of,
    scale,
)


class HypothesisFailed(ValueError):
    pass


class LrKey(NamedTuple):
    inner: Partition
    content: Partition
    outer: Partition

    @classmethod
    def canonical(cls, a, c, b) -> "LrKey":
        a, c, b = Partition(a), Partition(c), Partition(b)
        # c^b_{a,c} = c^b_{c,a}
        if c < a:
            a, c = c, a
        return cls(a, c, b)


class LRCache:
    """Memo table for LR coefficients, keyed by canonical :class:`LrKey`.

    Writes are idempotent, so concurrent last-writer-wins insertion is safe.
    """

    def __init__(self, records=None):
        self._data: dict[LrKey, int] = {}
        if records:
            for key, value in dict(records).items():
                self._data[LrKey.canonical(*key)] = int(value)
        self.hits = 0
        self.misses = 0

    def get(self, key: LrKey):
        value = self._data.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def __setitem__(self, key: LrKey, value: int):
        self._data[key] = value

    def __contains__(self, key):
        return key in self._data

    def __len__(self):
        return len(self._data)

    def records(self) -> dict[LrKey, int]:
        return dict(self._data)

    def clear(self):
        self._data.clear()
        self.hits = self.misses = 0


_default_cache = LRCache()


def default_cache() -> LRCache:
    return _default_cache


def _resolve(cache):
    if cache is None:
        return _default_cache
    if cache is False:
        return None
    return cache


def count_lr_tableaux(inner: Sequence[int], content: Sequence[int], outer: Sequence[int]) -> int:
    """Depth-first count of LR tableaux of shape ``outer/inner``, no memo."""
    inner, content, outer = Partition(inner), Partition(content), Partition(outer)
    if sum(outer) != sum(inner) + sum(content) or not contains(outer, inner):
        return 0
    nrows = len(outer)
    lam = tuple(inner) + (0,) * (nrows - len(inner))
    k = len(content)
    if k > nrows:
        return 0
    # reading order: top to bottom, each row right to left
    cells = [(r, j) for r in range(nrows) for j in range(outer[r] - 1, lam[r] - 1, -1)]
    if not cells:
        return 1
    grid = [[0] * outer[r] for r in range(nrows)]
    counts = [0] * (k + 1)
    ncells = len(cells)

    def dfs(idx):
        if idx == ncells:
            return 1
        r, j = cells[idx]
        hi = grid[r][j + 1] if j + 1 < outer[r] else k
        lo = grid[r - 1][j] + 1 if r > 0 and j >= lam[r - 1] else 1
        # entries in row r of an LR tableau never exceed r + 1
        hi = min(hi, r + 1)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            grid[r][j] = v
            total += dfs(idx + 1)
            counts[v] -= 1
        grid[r][j] = 0
        return total

    return dfs(0)


def lr_coefficient(a: Sequence[int], c: Sequence[int], b: Sequence[int], cache=None) -> int:
    """Multiplicity of ``S_b`` in ``S_a ⊗ S_c``.

    ``cache=None`` uses the module cache, ``cache=False`` disables memoization,
    and an :class:`LRCache` instance is used as given.
    """
    key = LrKey.canonical(a, c, b)
    store = _resolve(cache)
    if store is not None:
        hit = store.get(key)
        if hit is not None:
            return hit
    x, y, outer = key
    # the heavier factor as the inner shape keeps the skew shape small
    inner, content = (x, y) if sum(x) >= sum(y) else (y, x)
    value = count_lr_tableaux(inner, content, outer)
    if store is not None:
        store[key] = value
    return value


@dataclass
class Decomposition:
    """A finite sum ``⊕ mult·S_b`` computed at a fixed rank."""

    terms: dict[Partition, int] = field(default_factory=dict)
    rank: int = 0

    def __post_init__(self):
        self.terms = {Partition(b): m for b, m in self.terms.items() if m}

    def items(self) -> list[tuple[Partition, int]]:
        """Terms sorted by descending lexicographic order of the partition."""
        return sorted(self.terms.items(), reverse=True)

    def __getitem__(self, b):
        return self.terms.get(Partition(b), 0)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(b for b, _ in self.items())

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"b": list(b), "mult": str(m)} for b, m in self.items()],
        }


def _candidate_shapes(a: Partition, c: Partition, d: int) -> Iterator[Partition]:
    total = sum(a) + sum(c)
    a1 = a[0] if a else 0
    c1 = c[0] if c else 0
    for b in partitions_of(total, d, max_part=a1 + c1):
        if contains(b, a) and contains(b, c):
            yield b


def tensor_product(a: Sequence[int], c: Sequence[int], ctx: RankContext, cache=None) -> Decomposition:
    a, c = Partition(a), Partition(c)
    ctx.check(a)
    ctx.check(c)
    terms = {}
    for b in _candidate_shapes(a, c, ctx.d):
        m = lr_coefficient(a, c, b, cache=cache)
        if m:
            terms[b] = m
    return Decomposition(terms, ctx.d)


def _multiply(dec: Decomposition, c: Partition, ctx: RankContext, cache) -> Decomposition:
    terms: dict[Partition, int] = {}
    for b, m in dec.terms.items():
        for e, k in tensor_product(b, c, ctx, cache=cache).terms.items():
            terms[e] = terms.get(e, 0) + m * k
    return Decomposition(terms, ctx.d)


def tensor_power(a: Sequence[int], n: int, ctx: RankContext, cache=None) -> Decomposition:
    """Decomposition of ``(S_a)^{⊗n}``, truncated at rank ``d`` after every factor."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    a = Partition(a)
    ctx.check(a)
    dec = Decomposition({a: 1}, ctx.d)
    for _ in range(n - 1):
        dec = _multiply(dec, a, ctx, cache)
    return dec


def multiplicity(b: Sequence[int], dec: Decomposition) -> int:
    return dec[b]


def dim_schur(a: Sequence[int], d: int) -> int:
    """Dimension of ``S_a`` of a rank-``d`` space by the hook-content formula."""
    a = Partition(a)
    if len(a) > d:
        return 0
    conj = [sum(1 for x in a if x > j) for j in range(a[0])] if a else []
    num = den = 1
    for i, row in enumerate(a):
        for j in range(row):
            num *= d + j - i
            den *= (row - j) + (conj[j] - i) - 1
    assert num % den == 0
    return num // den


def check_semigroup(a, b, c, dd, e, f, ctx: RankContext, cache=None) -> bool:
    """Whether ``c+f`` occurs in ``(a+dd) ⊗ (b+e)`` given ``c ∈ a⊗b`` and ``f ∈ dd⊗e``.

    A False return means the semigroup property was refuted, which can only
    happen through a bug.
    """
    for p in (a, b, c, dd, e, f):
        ctx.check(p)
    if lr_coefficient(a, b, c, cache=cache) < 1:
        raise HypothesisFailed(f"{format_partition(c)} does not occur in "
                               f"{format_partition(a)} ⊗ {format_partition(b)}")
    if lr_coefficient(dd, e, f, cache=cache) < 1:
        raise HypothesisFailed(f"{format_partition(f)} does not occur in "
                               f"{format_partition(dd)} ⊗ {format_partition(e)}")
    return lr_coefficient(add(a, dd), add(b, e), add(c, f), cache=cache) >= 1


def check_dominance_bound(a: Sequence[int], n: int, ctx: RankContext, cache=None) -> list[Partition]:
    """Keys of ``(S_a)^{⊗n}`` not dominated by ``a``; always empty unless buggy."""
    dec = tensor_power(a, n, ctx, cache=cache)
    return [b for b in dec if not dominated_ext(b, a, ctx.d)]


def random_partition(rng: random.Random, max_weight: int, max_length: int) -> Partition:
    """Uniform choice among partitions of weight ``0..max_weight`` with bounded length."""
    pool = [p for w in range(max_weight + 1) for p in partitions_of(w, max_length)]
    return rng.choice(pool)


def sample_semigroup_tuple(rng: random.Random, ctx: RankContext, max_weight: int = 5, cache=None):
    """Draw ``(a, b, c, dd, e, f)`` with ``c ∈ a⊗b`` and ``f ∈ dd⊗e``."""
    a = random_partition(rng, max_weight, ctx.d)
    b = random_partition(rng, max_weight, ctx.d)
    c = rng.choice(list(tensor_product(a, b, ctx, cache=cache)))
    dd = random_partition(rng, max_weight, ctx.d)
    e = random_partition(rng, max_weight, ctx.d)
    f = rng.choice(list(tensor_product(dd, e, ctx, cache=cache)))
    return a, b, c, dd, e, f


def scaled_power(a: Sequence[int], l: int, n: int, ctx: RankContext, cache=None) -> Decomposition:
    """``(S_{l·a})^{⊗n}``; the empty product ``{∅: 1}`` when ``l = 0``."""
    if l == 0:
        return Decomposition({Partition(): 1}, ctx.d)
    return tensor_power(scale(a, l), n, ctx, cache=cache)
