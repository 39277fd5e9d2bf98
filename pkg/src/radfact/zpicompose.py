"""Formal ZPI rings: products of special-primary and Dedekind components.

A special-primary component is abstract: its ideal lattice is the chain
M^0 ⊃ M^1 ⊃ ... ⊃ M^t = 0, so an ideal is just an exponent in 0..t
(canonicalized by capping at t).  Dedekind components carry real quadratic
or rational-integer ideals and delegate to `quadring`.

Chains for ideals that touch a component's zero power (exponent t) are a
canonical choice rather than a unique factorization; such chains are
flagged with `canonical_extension=True` in the output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quadring import (DEFAULT_MAX_NORM, IntIdeal, IntRing, QuadIdeal,
                       QuadRing, sp_factor, whole_ring_ideal)


class _ZeroEntry:
    def __repr__(self):
        return "ZERO"


ZERO = _ZeroEntry()


@dataclass(frozen=True)
class SprComponent:
    """Abstract special primary ring with nilpotency index t >= 1."""

    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("nilpotency index must be >= 1")


@dataclass(frozen=True)
class DedComponent:
    """A Dedekind component: a quadratic maximal order or the rational integers."""

    ring: object

    def __post_init__(self):
        if not isinstance(self.ring, (QuadRing, IntRing)):
            raise ValueError("Dedekind component must be a QuadRing or IntRing")

    def unit_ideal(self):
        if isinstance(self.ring, IntRing):
            return IntIdeal(1)
        return whole_ring_ideal(self.ring)


@dataclass(frozen=True)
class ZpiRing:
    components: tuple

    def __post_init__(self):
        if not self.components:
            raise ValueError("a ZPI ring needs at least one component")
        for comp in self.components:
            if not isinstance(comp, (SprComponent, DedComponent)):
                raise ValueError(f"unrecognized component {comp!r}")

    def unit_ideal(self) -> "ZpiIdeal":
        return ZpiIdeal(self, tuple(
            0 if isinstance(c, SprComponent) else c.unit_ideal()
            for c in self.components))


def _canonical_entry(comp, entry):
    if isinstance(comp, SprComponent):
        if not isinstance(entry, int) or entry < 0:
            raise ValueError("special-primary entries are exponents >= 0")
        return min(entry, comp.t)
    if entry is ZERO:
        return ZERO
    if isinstance(comp.ring, IntRing):
        if not isinstance(entry, IntIdeal):
            raise ValueError("expected an IntIdeal entry")
        return entry
    if not isinstance(entry, QuadIdeal) or entry.ring != comp.ring:
        raise ValueError("expected a QuadIdeal of the component's ring")
    return entry


@dataclass(frozen=True)
class ZpiIdeal:
    """Componentwise ideal: exponents for SPR parts, ideals (or ZERO) for DED parts."""

    ring: ZpiRing
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != len(self.ring.components):
            raise ValueError("entry count does not match component count")
        canon = tuple(_canonical_entry(c, e)
                      for c, e in zip(self.ring.components, self.entries))
        object.__setattr__(self, "entries", canon)

    @property
    def is_unit(self) -> bool:
        return self == self.ring.unit_ideal()

    def has_zero_entry(self) -> bool:
        return any(e is ZERO for e in self.entries)


def zpi_product(i: ZpiIdeal, j: ZpiIdeal) -> ZpiIdeal:
    """Componentwise product: exponents add and cap at t; zero absorbs."""
    if i.ring != j.ring:
        raise ValueError("ideals of different ZPI rings")
    out = []
    for comp, a, b in zip(i.ring.components, i.entries, j.entries):
        if isinstance(comp, SprComponent):
            out.append(min(a + b, comp.t))
        elif a is ZERO or b is ZERO:
            out.append(ZERO)
        else:
            out.append(a * b)
    return ZpiIdeal(i.ring, tuple(out))


@dataclass(frozen=True)
class ZpiChain:
    """An ascending chain of ZpiIdeals whose product is a given ideal.

    `canonical_extension` is True when an SPR entry hit its zero power M^t;
    there the ascending form is a canonicalization, not a unique chain.
    """

    links: tuple
    canonical_extension: bool

    def __iter__(self):
        return iter(self.links)

    def __len__(self):
        return len(self.links)

    def product(self):
        out = self.links[0]
        for link in self.links[1:]:
            out = zpi_product(out, link)
        return out


def radical_chain(i: ZpiIdeal, max_norm: int = DEFAULT_MAX_NORM) -> ZpiChain:
    """Merge componentwise ascending chains into one chain of ZpiIdeals."""
    if i.is_unit:
        raise ValueError("the unit ideal has no radical chain")
    if i.has_zero_entry():
        raise ValueError("zero entries in Dedekind components are not factorable")
    comp_chains = []
    extension = False
    for comp, entry in zip(i.ring.components, i.entries):
        if isinstance(comp, SprComponent):
            comp_chains.append([1] * entry)
            if entry == comp.t:
                extension = True
        elif entry.is_whole:
            comp_chains.append([])
        else:
            comp_chains.append(list(sp_factor(entry, max_norm=max_norm).links))
    n = max(len(c) for c in comp_chains)
    links = []
    for pos in range(n):
        entries = []
        for comp, chain in zip(i.ring.components, comp_chains):
            if pos < len(chain):
                entries.append(chain[pos])
            elif isinstance(comp, SprComponent):
                entries.append(0)
            else:
                entries.append(comp.unit_ideal())
        links.append(ZpiIdeal(i.ring, tuple(entries)))
    chain = ZpiChain(tuple(links), extension)
    if chain.product() != i:
        raise ArithmeticError("componentwise chain failed to re-multiply")
    return chain


def ring_to_dict(r: ZpiRing) -> dict:
    comps = []
    for c in r.components:
        if isinstance(c, SprComponent):
            comps.append({"spr": c.t})
        elif isinstance(c.ring, IntRing):
            comps.append({"ded": "Z"})
        else:
            comps.append({"ded": {"d": c.ring.d}})
    return {"components": comps}


def ring_from_dict(obj) -> ZpiRing:
    comps = []
    for c in obj["components"]:
        if "spr" in c:
            comps.append(SprComponent(int(c["spr"])))
        elif "ded" in c:
            spec = c["ded"]
            if spec == "Z":
                comps.append(DedComponent(IntRing()))
            else:
                comps.append(DedComponent(QuadRing(int(spec["d"]))))
        else:
            raise ValueError(f"unrecognized component {c!r}")
    return ZpiRing(tuple(comps))


def ideal_to_list(i: ZpiIdeal) -> list:
    out = []
    for comp, e in zip(i.ring.components, i.entries):
        if isinstance(comp, SprComponent):
            out.append(e)
        elif e is ZERO:
            out.append("zero")
        elif isinstance(e, IntIdeal):
            out.append({"zint": e.n})
        else:
            out.append({"hnf": list(e.hnf)})
    return out


def ideal_from_list(ring: ZpiRing, items) -> ZpiIdeal:
    if len(items) != len(ring.components):
        raise ValueError("entry count does not match component count")
    entries = []
    for comp, item in zip(ring.components, items):
        if isinstance(comp, SprComponent):
            entries.append(int(item))
        elif item == "zero":
            entries.append(ZERO)
        elif isinstance(comp.ring, IntRing):
            n = item["zint"] if isinstance(item, dict) else item
            entries.append(IntIdeal(int(n)))
        else:
            hnf = item["hnf"] if isinstance(item, dict) else item
            entries.append(QuadIdeal(comp.ring, int(hnf[0]), int(hnf[1]), int(hnf[2])))
    return ZpiIdeal(ring, tuple(entries))
