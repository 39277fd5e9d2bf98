"""Ideal lattices of finite table rings: enumeration, radicals, spectrum.

Ideals are bitsets over element indices, compared and hashed by value; every
list of ideals produced here comes back sorted by bitset value so output is
deterministic.  Enumeration never touches the power set: it is a join
closure over the (few) distinct principal ideals.
"""

from __future__ import annotations

import numpy as np

from .errors import ResourceLimitError
from .finring import FinRing, elements_of, mask_of

DEFAULT_MAX_IDEALS = 1 << 20


def _validate_ideal_mask(ring, mask):
    if mask <= 0 or (mask >> ring.order):
        raise ValueError("members out of range for this ring")
    els = np.array(elements_of(mask), dtype=np.intp)
    member = np.zeros(ring.order, dtype=bool)
    member[els] = True
    if not member[ring.zero]:
        raise ValueError("an ideal must contain zero")
    if not member[ring.add[np.ix_(els, els)]].all():
        raise ValueError("subset is not closed under addition")
    if not member[ring.mul[:, els]].all():
        raise ValueError("subset is not closed under ring multiplication")


class FinIdeal:
    """An ideal of a FinRing, stored as a bitset of element indices."""

    __slots__ = ("ring", "mask", "_els", "_gens")

    def __init__(self, ring, elements):
        mask = mask_of(elements)
        _validate_ideal_mask(ring, mask)
        self.ring = ring
        self.mask = mask
        self._els = None
        self._gens = None

    @staticmethod
    def _unchecked(ring, mask, gens=None):
        i = object.__new__(FinIdeal)
        i.ring = ring
        i.mask = mask
        i._els = None
        i._gens = gens
        return i

    @classmethod
    def from_mask(cls, ring, mask):
        _validate_ideal_mask(ring, mask)
        return cls._unchecked(ring, mask)

    @property
    def elements(self) -> tuple[int, ...]:
        if self._els is None:
            self._els = elements_of(self.mask)
        return self._els

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, x):
        return bool((self.mask >> int(x)) & 1)

    def contains(self, other) -> bool:
        """Set containment: other ⊆ self."""
        return other.mask & ~self.mask == 0

    @property
    def is_whole(self) -> bool:
        return self.mask == self.ring.whole_mask

    @property
    def is_zero(self) -> bool:
        return self.mask == 1 << self.ring.zero

    def __eq__(self, other):
        return (isinstance(other, FinIdeal)
                and self.ring is other.ring and self.mask == other.mask)

    def __hash__(self):
        return hash((id(self.ring), self.mask))

    def __repr__(self):
        return f"FinIdeal({self.ring.label!r}, {list(self.elements)})"

    def to_list(self) -> list[int]:
        return list(self.elements)

    def small_gens(self) -> tuple[int, ...]:
        """A generating set of size at most log2(|I|), computed greedily."""
        if self._gens is None:
            ring = self.ring
            span = 1 << ring.zero
            span_els = np.array([ring.zero], dtype=np.intp)
            gens = []
            while span != self.mask:
                g = (self.mask & ~span)
                g = (g & -g).bit_length() - 1
                gens.append(g)
                pcol = np.unique(ring.mul[:, g])
                span_els = np.unique(ring.add[np.ix_(span_els, pcol)])
                span = mask_of(span_els)
            self._gens = tuple(gens)
        return self._gens


def zero_ideal(a: FinRing) -> FinIdeal:
    return FinIdeal._unchecked(a, 1 << a.zero, gens=())


def whole_ideal(a: FinRing) -> FinIdeal:
    return FinIdeal._unchecked(a, a.whole_mask, gens=(a.one,))


def generated_ideal(a: FinRing, gens) -> FinIdeal:
    """Least ideal containing the given elements."""
    gens = tuple(int(g) for g in gens)
    for g in gens:
        if not 0 <= g < a.order:
            raise ValueError(f"generator {g} out of range")
    S = np.unique(np.array(gens + (a.zero,), dtype=np.intp))
    while True:
        new = np.unique(np.concatenate(
            [a.mul[:, S].ravel(), a.add[np.ix_(S, S)].ravel()]))
        if new.size == S.size:
            break
        S = new.astype(np.intp)
    return FinIdeal._unchecked(a, mask_of(S), gens=tuple(sorted(set(gens))))


def _principal_ideals(a):
    """Distinct principal ideals as (mask, generator) pairs, cached on the ring."""
    cached = a._cache.get("principals")
    if cached is None:
        seen = {}
        for g in range(a.order):
            m = mask_of(np.unique(a.mul[:, g]))
            # rG is already closed under + and outer multiplication
            seen.setdefault(m, g)
        cached = sorted((m, g) for m, g in seen.items())
        a._cache["principals"] = cached
    return cached


def _sum_els(a, els1, els2):
    # the elementwise sum set of two additive subgroups is already a subgroup
    return np.unique(a.add[np.ix_(els1, els2)])


def all_ideals(a: FinRing, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[FinIdeal]:
    """Every ideal of a, in sorted bitset order."""
    cached = a._cache.get("ideals")
    if cached is None:
        principals = _principal_ideals(a)
        known = {}
        queue = []
        for m, g in principals:
            if m not in known:
                known[m] = (np.array(elements_of(m), dtype=np.intp), (g,))
                queue.append(m)
        while queue:
            mask = queue.pop()
            els, gens = known[mask]
            for pmask, g in principals:
                if pmask & ~mask == 0:
                    continue
                jels = _sum_els(a, els, np.array(elements_of(pmask), dtype=np.intp))
                jmask = mask_of(jels)
                if jmask not in known:
                    known[jmask] = (jels, gens + (g,))
                    queue.append(jmask)
                    if len(known) > max_ideals:
                        raise ResourceLimitError(
                            f"ideal count exceeds the max-ideals bound {max_ideals}",
                            "max-ideals", max_ideals)
        cached = [(m, known[m][1]) for m in sorted(known)]
        a._cache["ideals"] = cached
    if len(cached) > max_ideals:
        raise ResourceLimitError(
            f"ideal count {len(cached)} exceeds the max-ideals bound {max_ideals}",
            "max-ideals", max_ideals)
    return [FinIdeal._unchecked(a, m, gens=g) for m, g in cached]


def ideal_sum(i: FinIdeal, j: FinIdeal) -> FinIdeal:
    if i.ring is not j.ring:
        raise ValueError("ideals of different rings")
    a = i.ring
    els = _sum_els(a, np.array(i.elements, dtype=np.intp),
                   np.array(j.elements, dtype=np.intp))
    return FinIdeal._unchecked(a, mask_of(els), gens=None)


def ideal_product(i: FinIdeal, j: FinIdeal) -> FinIdeal:
    """The ideal generated by all pairwise products."""
    if i.ring is not j.ring:
        raise ValueError("ideals of different rings")
    a = i.ring
    jels = np.array(j.elements, dtype=np.intp)
    acc = np.array([a.zero], dtype=np.intp)
    for g in i.small_gens():
        acc = _sum_els(a, acc, np.unique(a.mul[jels, g]))
    return FinIdeal._unchecked(a, mask_of(acc), gens=None)


def ideal_power(i: FinIdeal, n: int) -> FinIdeal:
    if n < 0:
        raise ValueError("exponent must be >= 0")
    out = whole_ideal(i.ring)
    for _ in range(n):
        out = ideal_product(out, i)
    return out


def radical(i: FinIdeal) -> FinIdeal:
    """All x with x^k in I for some k <= ring order."""
    a = i.ring
    n = a.order
    member = np.zeros(n, dtype=bool)
    member[list(i.elements)] = True
    idx = np.arange(n)
    v = idx.copy()
    hit = member[v].copy()
    for _ in range(n - 1):
        if hit.all():
            break
        v = a.mul[v, idx]
        hit |= member[v]
    return FinIdeal._unchecked(a, mask_of(np.flatnonzero(hit)))


def is_prime(i: FinIdeal) -> bool:
    """Primality by exhaustive pair scan over the complement."""
    if i.is_whole:
        return False
    a = i.ring
    member = np.zeros(a.order, dtype=bool)
    member[list(i.elements)] = True
    comp = np.flatnonzero(~member)
    return not member[a.mul[np.ix_(comp, comp)]].any()


def prime_spectrum(a: FinRing, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[FinIdeal]:
    """All prime ideals; in a finite ring these are exactly the maximal ideals."""
    return [i for i in all_ideals(a, max_ideals) if is_prime(i)]


def maximal_ideals(a: FinRing, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[FinIdeal]:
    ideals = all_ideals(a, max_ideals)
    whole = a.whole_mask
    proper = [i for i in ideals if i.mask != whole]
    return [i for i in proper
            if not any(j.mask != i.mask and j.contains(i) for j in proper)]


def vn_set(i: FinIdeal, n: int, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[FinIdeal]:
    """All primes P with I ⊆ P^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for p in prime_spectrum(i.ring, max_ideals):
        if ideal_power(p, n).contains(i):
            out.append(p)
    return out
