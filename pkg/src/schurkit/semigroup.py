"""Remainder sets, generator decompositions and embedding certificates.

Every ``b`` in Z(a) is written as ``c + Σ_L m_L·v(L, mu·a)`` with ``c`` drawn
from a finite remainder set ``sigma(a)``.  A certificate records that a
subfactor ``S_b`` of ``(S_a)^{⊗n}`` sits inside ``(S_{l·a})^{⊗mu} ⊗ S_f``
with ``l = Σ m_L`` and ``f = c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .lr import LRCache, lr_coefficient, scaled_power, tensor_power
from .partitions import (
    Composition,
    Partition,
    RankContext,
    ZeroPartition,
    add,
    compositions,
    format_composition,
    format_partition,
    generator_map,
    in_Z,
    partitions_of,
    scale,
    subtract,
)


class CapTooSmall(ValueError):
    pass


class NotInZ(ValueError):
    pass


class NoDecomposition(RuntimeError):
    """No remainder in sigma was reached; the weight cap was too small."""


class ZeroM(ValueError):
    pass


def _in_Z_or_zero(b, a, d) -> bool:
    return not b or in_Z(b, a, d)


@dataclass(frozen=True)
class SigmaSet:
    a: Partition
    rank: int
    weight_cap: int
    members: frozenset

    def __contains__(self, p):
        return Partition(p) in self.members

    def sorted(self) -> list[Partition]:
        return sorted(self.members, key=lambda p: (sum(p), p))


def default_weight_cap(a: Sequence[int], ctx: RankContext) -> int:
    return 3 * ctx.mu * sum(a)


def compute_sigma(a: Sequence[int], ctx: RankContext, weight_cap: int | None = None) -> SigmaSet:
    """Irreducible elements of Z(a) ∪ {∅} up to ``weight_cap``.

    An element is irreducible when subtracting any generator ``v(L, mu·a)``
    never lands back in Z(a) ∪ {∅}.  The zero partition is always included.
    """
    a = Partition(a)
    if not a:
        raise ZeroPartition("sigma(a) needs a non-zero partition")
    ctx.check(a)
    if weight_cap is None:
        weight_cap = default_weight_cap(a, ctx)
    if weight_cap < ctx.mu * sum(a):
        raise CapTooSmall(f"weight cap {weight_cap} is below mu·|a| = {ctx.mu * sum(a)}")
    gens = sorted(generator_map(a, ctx).values(), reverse=True)
    members = {Partition()}
    for w in range(1, weight_cap + 1):
        for b in partitions_of(w, ctx.d):
            if not in_Z(b, a, ctx.d):
                continue
            reducible = False
            for v in gens:
                rest = subtract(b, v)
                if rest is not None and _in_Z_or_zero(rest, a, ctx.d):
                    reducible = True
                    break
            if not reducible:
                members.add(b)
    return SigmaSet(a, ctx.d, weight_cap, frozenset(members))


@dataclass(frozen=True)
class DecompositionWitness:
    """``b = c + Σ_L m[L]·v(L, mu·a)``; ``m`` lists every composition of ``d``."""

    c: Partition
    m: dict = field(hash=False)

    @property
    def M(self) -> int:
        return sum(self.m.values())

    def generator_sum(self, a, ctx: RankContext) -> Partition:
        gens = generator_map(a, ctx)
        g = Partition()
        for L, k in self.m.items():
            if k:
                g = add(g, scale(gens[Composition(L)], k))
        return g

    def reconstruct(self, a, ctx: RankContext) -> Partition:
        return add(self.c, self.generator_sum(a, ctx))

    def m_json(self) -> list[dict]:
        return [{"L": list(L), "count": k} for L, k in self.m.items()]


def decompose(b: Sequence[int], a: Sequence[int], ctx: RankContext, sigma: SigmaSet) -> DecompositionWitness:
    """Write ``b`` as a remainder in ``sigma`` plus generators.

    Every intermediate subtraction must stay in Z(a) ∪ {∅}.  The search is
    exhaustive; among all witnesses the one with the largest ``M`` wins, ties
    going to the lexicographically greatest ``m`` in composition order.
    """
    b, a = Partition(b), Partition(a)
    ctx.check(b)
    if not in_Z(b, a, ctx.d):
        raise NotInZ(f"{format_partition(b)} is not dominated by {format_partition(a)}")
    comps = compositions(ctx.d)
    gmap = generator_map(a, ctx)
    gens = [gmap[L] for L in comps]
    zero = (0,) * len(comps)

    @lru_cache(maxsize=None)
    def best(p):
        # returns (M, m vector, remainder) or None
        found = (0, zero, p) if p in sigma.members else None
        for i, v in enumerate(gens):
            rest = subtract(p, v)
            if rest is None or not _in_Z_or_zero(rest, a, ctx.d):
                continue
            sub = best(rest)
            if sub is None:
                continue
            m = list(sub[1])
            m[i] += 1
            cand = (sub[0] + 1, tuple(m), sub[2])
            if found is None or cand[:2] > found[:2]:
                found = cand
        return found

    result = best(b)
    if result is None:
        raise NoDecomposition(
            f"{format_partition(b)} reaches no remainder in sigma "
            f"(weight cap {sigma.weight_cap}); raise the cap")
    _, mvec, c = result
    return DecompositionWitness(c, dict(zip(comps, mvec)))


def verify_vinc(a: Sequence[int], ctx: RankContext, cache=None) -> dict[Partition, int]:
    """Multiplicity of each generator ``v(L, mu·a)`` in ``(S_a)^{⊗mu}``."""
    a = Partition(a)
    if not a:
        raise ZeroPartition("generators need a non-zero partition")
    power = tensor_power(a, ctx.mu, ctx, cache=cache)
    gens = sorted(set(generator_map(a, ctx).values()), reverse=True)
    return {v: power[v] for v in gens}


def verify_g(witness: DecompositionWitness, a: Sequence[int], ctx: RankContext, cache=None) -> bool:
    """Whether ``S_g`` occurs in ``(S_{M·a})^{⊗mu}`` for ``g = Σ m_L v(L, mu·a)``."""
    if witness.M == 0:
        raise ZeroM("witness uses no generators")
    g = witness.generator_sum(a, ctx)
    return tensor_power(scale(a, witness.M), ctx.mu, ctx, cache=cache)[g] >= 1


def containment_multiplicity(b, a, l: int, f, ctx: RankContext, cache=None) -> int:
    """Multiplicity of ``S_b`` in ``(S_{l·a})^{⊗mu} ⊗ S_f``."""
    power = scaled_power(a, l, ctx.mu, ctx, cache=cache)
    return sum(m * lr_coefficient(h, f, b, cache=cache) for h, m in power.terms.items())


@dataclass(frozen=True)
class Certificate:
    a: Partition
    n: int
    b: Partition
    f: Partition
    l: int
    witness: DecompositionWitness = field(hash=False)
    weight_identity: bool
    multiplicity: int
    verified: bool

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "n": self.n,
            "b": list(self.b),
            "l": self.l,
            "f": list(self.f),
            "m": self.witness.m_json(),
            "weight_identity": self.weight_identity,
            "verified": self.verified,
        }

    def to_text(self) -> str:
        m = ",".join(f"{format_composition(L)}:{k}" for L, k in self.witness.m.items())
        return (f"b={format_partition(self.b)} l={self.l} f={format_partition(self.f)} "
                f"m={m} mult={self.multiplicity} "
                f"weight_identity={str(self.weight_identity).lower()} "
                f"verified={str(self.verified).lower()}")


def _weight_identity(a, n, l, f, ctx) -> bool:
    return n * sum(a) == ctx.mu * l * sum(a) + sum(f)


def certify(a: Sequence[int], n: int, ctx: RankContext, sigma: SigmaSet, cache=None) -> list[Certificate]:
    """One certificate per subfactor of ``(S_a)^{⊗n}``, in descending lex order of ``b``."""
    a = Partition(a)
    if not a:
        raise ZeroPartition("certify needs a non-zero partition")
    certs = []
    for b in tensor_power(a, n, ctx, cache=cache):
        w = decompose(b, a, ctx, sigma)
        l, f = w.M, w.c
        identity = _weight_identity(a, n, l, f, ctx)
        assert identity, (b, l, f)
        mult = containment_multiplicity(b, a, l, f, ctx, cache=cache)
        certs.append(Certificate(a, n, b, f, l, w, identity, mult, identity and mult >= 1))
    return certs


def verify_certificate(cert: Certificate, ctx: RankContext) -> bool:
    """Recheck a certificate from scratch, bypassing every cache.

    Beyond the weight identity and the containment multiplicity, the
    remainder must lie in Z(a) ∪ {∅} and agree with the witness.
    """
    a, b, f, l = cert.a, Partition(cert.b), Partition(cert.f), cert.l
    if not _weight_identity(a, cert.n, l, f, ctx):
        return False
    if not _in_Z_or_zero(f, a, ctx.d):
        return False
    w = cert.witness
    if w.c != f or w.M != l or w.reconstruct(a, ctx) != b:
        return False
    return containment_multiplicity(b, a, l, f, ctx, cache=LRCache()) >= 1
