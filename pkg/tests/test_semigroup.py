from dataclasses import replace

import pytest

from schurkit.lr import dim_schur, tensor_power, tensor_product
from schurkit.partitions import Partition, RankContext, in_Z, partitions_of, subtract
from schurkit.semigroup import (
    CapTooSmall,
    DecompositionWitness,
    NoDecomposition,
    NotInZ,
    ZeroM,
    certify,
    compute_sigma,
    containment_multiplicity,
    decompose,
    verify_certificate,
    verify_g,
    verify_vinc,
)

from oracles import oracle_decompose, oracle_sigma


CTX2 = RankContext(2)


@pytest.fixture(scope="module")
def sigma21():
    return compute_sigma((2, 1), CTX2, 12)


# frozen from oracle_sigma((2, 1), 2, 12); (4,3) lies in Z((2,1)) and no
# generator can be subtracted from it without leaving Z((2,1)) ∪ {∅}
SIGMA21_CAP12 = {(), (1, 1), (2, 1), (2, 2), (3, 2), (4, 3)}


def test_sigma_example(sigma21):
    assert oracle_sigma((2, 1), 2, 12) == SIGMA21_CAP12
    assert sigma21.members == SIGMA21_CAP12
    assert sigma21.weight_cap == 12 and sigma21.rank == 2


def test_sigma_small_examples():
    assert compute_sigma((1,), RankContext(1), 3).members == {()}
    assert compute_sigma((1, 1), CTX2, 8).members == {(), (1, 1)}


def test_sigma_cap_too_small():
    with pytest.raises(CapTooSmall):
        compute_sigma((2, 1), CTX2, 5)


def test_sigma_default_cap():
    assert compute_sigma((2, 1), CTX2).weight_cap == 18


@pytest.mark.parametrize("a, d", [
    ((1,), 2), ((2,), 2), ((1, 1), 2), ((2, 1), 2), ((3, 1), 2), ((2, 2), 2), ((3,), 2),
    ((1,), 3), ((2, 1), 3), ((1, 1, 1), 3), ((1, 1), 3),
])
def test_sigma_matches_oracle(a, d):
    ctx = RankContext(d)
    cap = 2 * ctx.mu * sum(a)
    sigma = compute_sigma(a, ctx, cap)
    assert sigma.members == oracle_sigma(a, d, cap)
    for p in sigma.members:
        assert sum(p) <= cap
        assert not p or in_Z(p, a, d)


def test_sigma_irreducible(sigma21):
    from schurkit.partitions import generators
    for p in sigma21.members:
        for v in generators((2, 1), CTX2):
            rest = subtract(p, v)
            assert rest is None or (rest and not in_Z(rest, (2, 1), 2))


@pytest.mark.parametrize("b, c, m", [
    ((6, 3), (2, 1), {(1, 1): 1, (2,): 0}),
    ((3, 3), (), {(1, 1): 0, (2,): 1}),
    ((1, 1), (1, 1), {(1, 1): 0, (2,): 0}),
])
def test_decompose_examples(sigma21, b, c, m):
    w = decompose(b, (2, 1), CTX2, sigma21)
    assert w.c == c
    assert w.m == m
    assert w.M == sum(m.values())
    assert w.reconstruct((2, 1), CTX2) == b


def test_decompose_errors(sigma21):
    with pytest.raises(NotInZ):
        decompose((3,), (2, 1), CTX2, sigma21)
    small = compute_sigma((2, 1), CTX2, 6)
    with pytest.raises(NoDecomposition):
        decompose((4, 3), (2, 1), CTX2, small)


@pytest.mark.parametrize("a, d", [((2, 1), 2), ((3, 1), 2), ((1,), 2), ((2, 1), 3), ((1, 1), 3)])
def test_decompose_matches_oracle(a, d):
    ctx = RankContext(d)
    cap = 2 * ctx.mu * sum(a)
    sigma = compute_sigma(a, ctx, cap)
    for w in range(1, cap + 1):
        for b in partitions_of(w, d):
            if not in_Z(b, a, d):
                continue
            expected = oracle_decompose(b, a, d, sigma.members)
            if expected is None:
                with pytest.raises(NoDecomposition):
                    decompose(b, a, ctx, sigma)
                continue
            wit = decompose(b, a, ctx, sigma)
            assert (wit.M, tuple(wit.m.values())) == expected
            assert wit.reconstruct(a, ctx) == b
            assert sum(b) == sum(wit.c) + wit.M * ctx.mu * sum(a)


def test_decompose_deterministic(sigma21):
    first = decompose((9, 6), (2, 1), CTX2, sigma21)
    for _ in range(3):
        assert decompose((9, 6), (2, 1), CTX2, sigma21) == first


@pytest.mark.parametrize("a, d", [((1,), 1), ((2, 1), 2), ((1, 1), 2), ((2,), 2), ((1,), 3), ((2, 1), 3)])
def test_sigma_completeness(a, d):
    ctx = RankContext(d)
    sigma = compute_sigma(a, ctx)
    for w in range(1, sigma.weight_cap - ctx.mu * sum(a) + 1):
        for b in partitions_of(w, d):
            if in_Z(b, a, d):
                assert decompose(b, a, ctx, sigma).c in sigma


def test_verify_vinc_examples():
    assert verify_vinc((2, 1), CTX2) == {(4, 2): 1, (3, 3): 1}
    assert verify_vinc((1,), RankContext(1)) == {(1,): 1}
    assert verify_vinc((1, 1), CTX2) == {(2, 2): 1}


def test_verify_g_examples():
    assert verify_g(DecompositionWitness(Partition(), {(1, 1): 0, (2,): 1}), (2, 1), CTX2)
    assert verify_g(DecompositionWitness(Partition(), {(1, 1): 1, (2,): 0}), (2, 1), CTX2)
    both = DecompositionWitness(Partition(), {(1, 1): 1, (2,): 1})
    assert both.generator_sum((2, 1), CTX2) == (7, 5)
    assert tensor_power((4, 2), 2, CTX2)[(7, 5)] >= 1
    assert verify_g(both, (2, 1), CTX2)
    with pytest.raises(ZeroM):
        verify_g(DecompositionWitness(Partition([1, 1]), {(1, 1): 0, (2,): 0}), (2, 1), CTX2)


def test_certify_n3(sigma21):
    certs = certify((2, 1), 3, CTX2, sigma21)
    assert [(c.b, c.l, c.f) for c in certs] == [((6, 3), 1, (2, 1)), ((5, 4), 1, (2, 1))]
    expansion = {}
    for h, m in tensor_power((2, 1), 2, CTX2).terms.items():
        for b, k in tensor_product(h, (2, 1), CTX2).terms.items():
            expansion[b] = expansion.get(b, 0) + m * k
    assert expansion == {(6, 3): 1, (5, 4): 2}
    for c in certs:
        assert c.verified and c.weight_identity
        assert c.multiplicity == expansion[c.b]
        assert 3 * 3 == 2 * c.l * 3 + sum(c.f)


def test_certify_n2(sigma21):
    certs = certify((2, 1), 2, CTX2, sigma21)
    assert [(c.b, c.l, c.f) for c in certs] == [((4, 2), 1, ()), ((3, 3), 1, ())]
    assert all(c.verified for c in certs)


def test_certify_n1(sigma21):
    (cert,) = certify((2, 1), 1, CTX2, sigma21)
    assert (cert.b, cert.l, cert.f) == ((2, 1), 0, (2, 1))
    assert cert.verified


def test_l_zero_containment_degenerates():
    assert containment_multiplicity((2, 1), (2, 1), 0, (2, 1), CTX2) == 1
    assert containment_multiplicity((2, 1), (2, 1), 0, (1, 1), CTX2) == 0


def test_verify_certificate_and_tampering(sigma21):
    cert = certify((2, 1), 3, CTX2, sigma21)[0]
    assert cert.b == (6, 3)
    assert verify_certificate(cert, CTX2)
    assert not verify_certificate(replace(cert, l=0), CTX2)
    assert not verify_certificate(replace(cert, f=Partition([3])), CTX2)


def test_verify_certificate_rejects_wrong_subfactor(sigma21):
    cert = certify((2, 1), 3, CTX2, sigma21)[0]
    # (7, 2) has the right weight but is not a subfactor of the expansion
    assert not verify_certificate(replace(cert, b=Partition([7, 2])), CTX2)


def test_certify_dimension_count():
    ctx = RankContext(3)
    sigma = compute_sigma((1,), ctx)
    certs = certify((1,), 3, ctx, sigma)
    total = sum(tensor_power((1,), 3, ctx)[c.b] * dim_schur(c.b, 3) for c in certs)
    assert total == 3 ** 3
    assert all(c.verified for c in certs)
