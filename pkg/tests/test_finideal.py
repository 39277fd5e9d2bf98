import itertools

import pytest

from radfact import finring as fr
from radfact.errors import ResourceLimitError
from radfact.finideal import (FinIdeal, all_ideals, generated_ideal, ideal_power,
                              ideal_product, ideal_sum, is_prime, maximal_ideals,
                              prime_spectrum, radical, vn_set, whole_ideal,
                              zero_ideal)


def flagship():
    z2 = fr.make_zn(2)
    return fr.make_idealization(z2, fr.free_module(z2, 2))


def brute_force_ideals(ring):
    """Oracle: filter every subset containing zero for the ideal axioms."""
    n = ring.order
    out = set()
    for mask in range(1 << n):
        if not (mask >> ring.zero) & 1:
            continue
        els = [i for i in range(n) if (mask >> i) & 1]
        if any(not (mask >> ring.add_el(x, y)) & 1 for x in els for y in els):
            continue
        if any(not (mask >> ring.mul_el(r, x)) & 1 for r in range(n) for x in els):
            continue
        out.add(mask)
    return out


def test_generated_ideal_examples():
    z12 = fr.make_zn(12)
    assert generated_ideal(z12, []).to_list() == [0]
    assert generated_ideal(z12, [1]).to_list() == list(range(12))
    assert generated_ideal(z12, [8]).to_list() == [0, 4, 8]


def test_ideal_constructor_validates():
    z4 = fr.make_zn(4)
    with pytest.raises(ValueError):
        FinIdeal(z4, [1, 2])      # misses zero
    with pytest.raises(ValueError):
        FinIdeal(z4, [0, 1])      # not closed under multiplication by 2... (1*2=2 missing)
    assert FinIdeal(z4, [0, 2]).to_list() == [0, 2]


def test_all_ideals_counts():
    assert len(all_ideals(fr.make_zn(4))) == 3
    assert len(all_ideals(fr.make_zn(1))) == 1
    gf4 = fr.make_poly_quotient(fr.make_zn(2), [1, 1, 1])
    assert len(all_ideals(gf4)) == 2
    assert len(all_ideals(flagship())) == 6


def test_all_ideals_sorted_and_deterministic():
    z12 = fr.make_zn(12)
    first = [i.mask for i in all_ideals(z12)]
    assert first == sorted(first)
    assert first == [i.mask for i in all_ideals(z12)]


def test_all_ideals_against_subset_oracle():
    rings = [fr.make_zn(n) for n in (4, 6, 12, 16)]
    rings.append(fr.make_poly_quotient(fr.make_zn(2), [0, 0, 1]))
    rings.append(fr.make_poly_quotient(fr.make_zn(2), [1, 1, 1]))
    rings.append(fr.make_product(fr.make_zn(2), fr.make_zn(4)))
    rings.append(flagship())
    for ring in rings:
        assert ring.order <= 16
        assert {i.mask for i in all_ideals(ring)} == brute_force_ideals(ring)


def test_all_ideals_resource_bound():
    with pytest.raises(ResourceLimitError) as exc:
        all_ideals(fr.make_zn(12), max_ideals=2)
    assert exc.value.bound == "max-ideals"


def test_ideal_product_examples():
    z12 = fr.make_zn(12)
    i2 = generated_ideal(z12, [2])
    i3 = generated_ideal(z12, [3])
    assert ideal_product(i2, i3).to_list() == generated_ideal(z12, [6]).to_list()
    assert ideal_product(i2, whole_ideal(z12)) == i2
    b = flagship()
    m = generated_ideal(b, [1, 2])   # (x, y)
    assert ideal_product(m, m) == zero_ideal(b)


def test_product_contained_in_intersection():
    z36 = fr.make_zn(36)
    ideals = all_ideals(z36)
    for i, j in itertools.product(ideals, repeat=2):
        p = ideal_product(i, j)
        assert i.contains(p) and j.contains(p)


def test_radical_examples():
    z4 = fr.make_zn(4)
    assert radical(zero_ideal(z4)).to_list() == [0, 2]
    assert radical(whole_ideal(z4)) == whole_ideal(z4)
    b = flagship()
    x_ideal = generated_ideal(b, [2])
    assert radical(x_ideal).to_list() == [0, 1, 2, 3]


def test_radical_is_idempotent_and_extensive():
    for ring in (fr.make_zn(24), fr.make_zn(36), flagship()):
        for i in all_ideals(ring):
            r = radical(i)
            assert r.contains(i)
            assert radical(r) == r


def test_is_prime_examples():
    z6 = fr.make_zn(6)
    assert is_prime(generated_ideal(z6, [2]))
    assert not is_prime(zero_ideal(fr.make_zn(4)))
    assert not is_prime(whole_ideal(z6))


def test_spectrum_of_flagship():
    b = flagship()
    assert [p.to_list() for p in prime_spectrum(b)] == [[0, 1, 2, 3]]


def test_spectrum_equals_maximal_ideals():
    for ring in (fr.make_zn(12), fr.make_zn(30), flagship(),
                 fr.make_product(fr.make_zn(4), fr.make_zn(9))):
        assert [p.mask for p in prime_spectrum(ring)] == \
            sorted(m.mask for m in maximal_ideals(ring))


def test_vn_set_examples():
    z8 = fr.make_zn(8)
    i4 = generated_ideal(z8, [4])
    v1 = vn_set(i4, 1)
    assert [p.to_list() for p in v1] == [[0, 2, 4, 6]]
    v2 = vn_set(i4, 2)
    assert [p.to_list() for p in v2] == [[0, 2, 4, 6]]
    assert vn_set(i4, 3) == []
    with pytest.raises(ValueError):
        vn_set(i4, 0)


def test_vn_nesting():
    for ring in (fr.make_zn(48), fr.make_zn(72)):
        for i in all_ideals(ring):
            prev = None
            for n in range(1, 6):
                cur = {p.mask for p in vn_set(i, n)}
                if prev is not None:
                    assert cur <= prev
                prev = cur


def test_v1_is_containment():
    z36 = fr.make_zn(36)
    for i in all_ideals(z36):
        direct = {p.mask for p in prime_spectrum(z36) if p.contains(i)}
        assert {p.mask for p in vn_set(i, 1)} == direct


def test_ideal_sum_is_join():
    z36 = fr.make_zn(36)
    ideals = all_ideals(z36)
    for i, j in itertools.product(ideals[:6], repeat=2):
        s = ideal_sum(i, j)
        assert s.contains(i) and s.contains(j)
        assert s.mask == (generated_ideal(z36, i.elements + j.elements)).mask


def test_ideal_power():
    z8 = fr.make_zn(8)
    m = generated_ideal(z8, [2])
    assert ideal_power(m, 0) == whole_ideal(z8)
    assert ideal_power(m, 2).to_list() == [0, 4]
    assert ideal_power(m, 3).to_list() == [0]
