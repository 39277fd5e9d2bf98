import pytest

from conftest import SUPPORTED_D, random_quad_ideal, random_radical_quad_ideal
from radfact import quadring as q
from radfact.errors import ResourceLimitError


def test_ring_validation():
    for bad in (0, 1, 4, 12, -4, 18):
        with pytest.raises(ValueError):
            q.QuadRing(bad)
    assert q.QuadRing(-1).min_poly == (1, 0)         # x^2 + 1
    assert q.QuadRing(5).min_poly == (-1, -1)        # x^2 - x - 1
    assert q.QuadRing(-7).min_poly == (2, -1)        # x^2 - x + 2
    assert not q.QuadRing(-5).omega_is_half
    assert q.QuadRing(-7).omega_is_half


def test_element_arithmetic():
    zi = q.QuadRing(-1)
    assert zi.mul_elements((2, 1), (2, -1)) == (5, 0)
    assert zi.elem_norm((3, 4)) == 25
    golden = q.QuadRing(5)
    # w^2 = w + 1 for the golden ratio order
    assert golden.mul_elements((0, 1), (0, 1)) == (1, 1)
    assert golden.elem_norm((1, 1)) == 1             # 1 + w is a unit


def test_ideal_from_gens_examples():
    zi = q.QuadRing(-1)
    whole = q.ideal_from_gens(zi, [(1, 0)])
    assert whole.hnf == (1, 0, 1) and whole.is_whole
    p2 = q.ideal_from_gens(zi, [(2, 0), (1, 1)])
    assert p2.norm == 2
    z5 = q.QuadRing(-5)
    assert q.ideal_from_gens(z5, [(6, 0)]).norm == 36
    with pytest.raises(ValueError):
        q.ideal_from_gens(zi, [(0, 0)])


def test_hnf_invariants_rejected():
    zi = q.QuadRing(-1)
    with pytest.raises(ValueError):
        q.QuadIdeal(zi, 4, 1, 2)       # c does not divide b
    with pytest.raises(ValueError):
        q.QuadIdeal(zi, 3, 1, 1)       # not closed under multiplication by w
    with pytest.raises(ValueError):
        q.QuadIdeal(zi, -2, 0, 2)


def test_ramified_square():
    z5 = q.QuadRing(-5)
    p2 = q.ideal_from_gens(z5, [(2, 0), (1, 1)])
    assert (p2 * p2) == q.principal_ideal(z5, (2, 0))


def test_norm_multiplicativity_random(rng):
    for d in SUPPORTED_D:
        ring = q.QuadRing(d)
        for _ in range(40):
            i = random_quad_ideal(rng, ring, 10 ** 4)
            j = random_quad_ideal(rng, ring, 10 ** 4)
            assert (i * j).norm == i.norm * j.norm


def test_contains_and_sum():
    z5 = q.QuadRing(-5)
    i6 = q.principal_ideal(z5, (6, 0))
    p2 = q.ideal_from_gens(z5, [(2, 0), (1, 1)])
    assert p2.contains(i6)
    assert not i6.contains(p2)
    s = q.ideal_sum(i6, q.principal_ideal(z5, (2, 0)))
    assert s == q.principal_ideal(z5, (2, 0))


def test_primes_above_split_inert_ramified():
    zi = q.QuadRing(-1)
    above5 = q.primes_above(zi, 5)
    assert [(p.hnf, e) for p, e in above5] == [((5, 2, 1), 1), ((5, 3, 1), 1)]
    above2 = q.primes_above(zi, 2)
    assert [(p.hnf, e) for p, e in above2] == [((2, 1, 1), 2)]
    z5 = q.QuadRing(-5)
    above11 = q.primes_above(z5, 11)
    assert [(p.hnf, e) for p, e in above11] == [((11, 0, 11), 1)]
    assert above11[0][0].norm == 121
    with pytest.raises(ValueError):
        q.primes_above(zi, 6)
    with pytest.raises(ValueError):
        q.primes_above(zi, 1)


def test_splitting_soundness_small():
    for d in SUPPORTED_D:
        ring = q.QuadRing(d)
        for p in (2, 3, 5, 7, 11, 13, 97):
            prod = q.whole_ring_ideal(ring)
            for prime, e in q.primes_above(ring, p):
                for _ in range(e):
                    prod = prod * prime
            assert prod == q.principal_ideal(ring, (p, 0)), (d, p)


def test_factor_ideal_examples():
    zi = q.QuadRing(-1)
    f12 = q.factor_ideal(q.principal_ideal(zi, (12, 0)))
    assert [(p.hnf, e) for p, e in f12] == [((2, 1, 1), 4), ((3, 0, 3), 1)]
    z5 = q.QuadRing(-5)
    f6 = q.factor_ideal(q.principal_ideal(z5, (6, 0)))
    assert [(p.norm, e) for p, e in f6] == [(2, 2), (3, 1), (3, 1)]
    # re-assembly oracle: multiply the factorization back together
    prod = q.whole_ring_ideal(z5)
    for p, e in f6:
        for _ in range(e):
            prod = prod * p
    assert prod == q.principal_ideal(z5, (6, 0))
    assert len(q.factor_ideal(q.whole_ring_ideal(zi))) == 0


def test_factorization_rejects_unfactorable_norms():
    zi = q.QuadRing(-1)
    with pytest.raises(ResourceLimitError):
        q.factor_ideal(q.principal_ideal(zi, (2, 0)), max_norm=3)
    big = 1000003  # prime just over the trial-division bound
    with pytest.raises(ResourceLimitError):
        q.factor_int(big * (big + 30), 10 ** 14)    # composite cofactor survives
    assert q.factor_int(big, 10 ** 12) == {big: 1}


def test_radical_and_vn():
    zi = q.QuadRing(-1)
    i12 = q.principal_ideal(zi, (12, 0))
    assert q.radical(i12).norm == 18
    assert [p.hnf for p in q.vn(i12, 4)] == [(2, 1, 1)]
    assert q.vn(i12, 5) == []
    p5, _ = q.primes_above(zi, 5)[0]
    assert q.radical(p5) == p5


def test_sp_factor_examples():
    z5 = q.QuadRing(-5)
    i6 = q.principal_ideal(z5, (6, 0))
    chain = q.sp_factor(i6)
    assert [l.norm for l in chain] == [18, 2]
    assert chain.product() == i6
    prime, _ = q.primes_above(z5, 11)[0]
    assert [l.hnf for l in q.sp_factor(prime)] == [prime.hnf]
    with pytest.raises(ValueError):
        q.sp_factor(q.whole_ring_ideal(z5))
    assert len(q.sp_factor(q.whole_ring_ideal(z5), allow_unit=True)) == 0


def test_sp_factor_int_shortcut():
    assert [l.n for l in q.sp_factor(q.IntIdeal(12))] == [6, 2]
    assert [l.n for l in q.sp_factor(q.IntIdeal(7))] == [7]
    chain = q.sp_factor(q.IntIdeal(360))            # 2^3 3^2 5
    assert [l.n for l in chain] == [30, 6, 2]
    assert chain.product() == q.IntIdeal(360)


def test_normalize_factorization():
    out = q.normalize_factorization(q.INT_RING, [q.IntIdeal(2), q.IntIdeal(6)])
    assert [l.n for l in out] == [6, 2]
    chain = q.sp_factor(q.IntIdeal(360))
    again = q.normalize_factorization(q.INT_RING, list(chain.links))
    assert [l.n for l in again] == [l.n for l in chain]
    with pytest.raises(ValueError) as exc:
        q.normalize_factorization(q.INT_RING, [q.IntIdeal(6), q.IntIdeal(4)])
    assert "factor 1" in str(exc.value)
    with pytest.raises(ValueError):
        q.normalize_factorization(q.INT_RING, [q.IntIdeal(1)])
    with pytest.raises(ValueError):
        q.normalize_factorization(q.INT_RING, [])


def test_normalize_is_permutation_invariant(rng):
    ring = q.QuadRing(-5)
    for _ in range(25):
        factors = [random_radical_quad_ideal(rng, ring, 10 ** 3) for _ in range(3)]
        base = q.normalize_factorization(ring, factors)
        for perm in ([2, 0, 1], [1, 2, 0], [2, 1, 0]):
            out = q.normalize_factorization(ring, [factors[k] for k in perm])
            assert [l.hnf for l in out] == [l.hnf for l in base]


def test_verify_chain_flags_problems():
    bad = q.RadicalChain((q.IntIdeal(2), q.IntIdeal(6)))
    checks = q.verify_chain(bad, q.IntIdeal(12))
    assert not checks["ascending"]
    good = q.sp_factor(q.IntIdeal(12))
    assert all(q.verify_chain(good, q.IntIdeal(12)).values())


def test_corollary5_sum_identity_small(rng):
    ring = q.QuadRing(-1)
    for _ in range(30):
        i = random_quad_ideal(rng, ring, 10 ** 4)
        j = random_quad_ideal(rng, ring, 10 ** 4)
        s = q.ideal_sum(i, j)
        if s.is_whole:
            continue
        for n in (1, 2, 3):
            lhs = {p.hnf for p in q.vn(s, n)}
            rhs = {p.hnf for p in q.vn(i, n)} & {p.hnf for p in q.vn(j, n)}
            assert lhs == rhs


def test_vn_nesting_and_vanishing(rng):
    for d in (-1, 5):
        ring = q.QuadRing(d)
        for _ in range(20):
            i = random_quad_ideal(rng, ring, 10 ** 4)
            pf = q.factor_ideal(i)
            prev = None
            for n in range(1, pf.max_exponent + 2):
                cur = {p.hnf for p in q.vn(i, n)}
                if prev is not None:
                    assert cur <= prev
                prev = cur
            assert q.vn(i, pf.max_exponent + 1) == []


def test_chain_norms_multiply_to_ideal_norm(rng):
    ring = q.QuadRing(-5)
    for _ in range(25):
        i = random_quad_ideal(rng, ring, 10 ** 5)
        chain = q.sp_factor(i)
        prod = 1
        for link in chain:
            prod *= link.norm
        assert prod == i.norm


def test_int_ideal_basics():
    i = q.IntIdeal(12)
    assert i.norm == 12 and not i.is_whole
    assert q.IntIdeal(6).contains(i)
    assert not i.contains(q.IntIdeal(6))
    assert (q.IntIdeal(4) * q.IntIdeal(9)).n == 36
    with pytest.raises(ValueError):
        q.IntIdeal(0)
    pf = q.IntIdeal(360).factorization()
    assert [(p.n, e) for p, e in pf] == [(2, 3), (3, 2), (5, 1)]
