"""Exact ideal arithmetic in quadratic orders Z[w], plus a rational shortcut.

Only maximal orders are supported: w = sqrt(d) when d = 2, 3 (mod 4) and
w = (1+sqrt(d))/2 when d = 1 (mod 4), with d squarefree.  A nonzero ideal
is a rank-2 sublattice with basis rows (a, 0), (b, c) over (1, w), kept in
Hermite normal form with a > 0, c > 0, c | a, c | b, 0 <= b < a; equality
of ideals is therefore plain tuple equality and norm(I) = a*c.

`IntIdeal` is the same machinery for ideals of the rational integers
(an ideal is just its positive generator); it shares PrimeFactorization
and RadicalChain with the quadratic case and is the cheapest oracle for
the ascending-chain factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import ClassVar

from sympy import isprime
from sympy.ntheory.residue_ntheory import sqrt_mod

from .errors import ResourceLimitError

DEFAULT_MAX_NORM = 10 ** 12
_TRIAL_LIMIT = 10 ** 6

_small_primes: list[int] = []
_sieved_to = 0


def _primes_below(limit):
    global _small_primes, _sieved_to
    if _sieved_to < limit:
        sieve = bytearray([1]) * limit
        sieve[0:2] = b"\x00\x00"
        for p in range(2, isqrt(limit - 1) + 1):
            if sieve[p]:
                sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
        _small_primes = [i for i, b in enumerate(sieve) if b]
        _sieved_to = limit
    return _small_primes


def factor_int(n: int, max_norm: int = DEFAULT_MAX_NORM) -> dict[int, int]:
    """Factor a positive integer by trial division, refusing to guess.

    Trial-divides by primes up to 10^6; a remaining cofactor must pass a
    deterministic primality test or the whole factorization is rejected
    with a resource error (never silently mis-factored).
    """
    if n < 1:
        raise ValueError("can only factor positive integers")
    if n > max_norm:
        raise ResourceLimitError(
            f"{n} exceeds the max-norm bound {max_norm}", "max-norm", max_norm)
    out: dict[int, int] = {}
    rem = n
    for p in _primes_below(_TRIAL_LIMIT):
        if p * p > rem:
            break
        while rem % p == 0:
            out[p] = out.get(p, 0) + 1
            rem //= p
    if rem > 1:
        if rem < _TRIAL_LIMIT * _TRIAL_LIMIT or isprime(rem):
            out[rem] = out.get(rem, 0) + 1
        else:
            raise ResourceLimitError(
                f"cofactor {rem} is composite beyond the trial-division bound",
                "max-norm", max_norm)
    return out


def _xgcd(a, b):
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return g, x, y


@dataclass(frozen=True)
class QuadRing:
    """The maximal order Z[w] of Q(sqrt(d)), d squarefree and not 0 or 1."""

    d: int

    def __post_init__(self):
        if self.d in (0, 1):
            raise ValueError("d must not be 0 or 1")
        if any(e > 1 for e in factor_int(abs(self.d)).values()):
            raise ValueError(f"d = {self.d} is not squarefree")

    @property
    def omega_is_half(self) -> bool:
        return self.d % 4 == 1

    @property
    def min_poly(self) -> tuple[int, int]:
        """(c0, c1) with w^2 + c1*w + c0 = 0."""
        if self.omega_is_half:
            return (-(self.d - 1) // 4, -1)
        return (-self.d, 0)

    @property
    def label(self) -> str:
        if self.d == -1:
            return "Z[i]"
        if self.omega_is_half:
            return f"Z[(1+sqrt({self.d}))/2]"
        return f"Z[sqrt({self.d})]"

    def mul_elements(self, e1, e2):
        """(x1 + y1*w)(x2 + y2*w) in coordinates over (1, w)."""
        x1, y1 = e1
        x2, y2 = e2
        c0, c1 = self.min_poly
        # w^2 = -c0 - c1*w
        yy = y1 * y2
        return (x1 * x2 - c0 * yy, x1 * y2 + x2 * y1 - c1 * yy)

    def elem_norm(self, e) -> int:
        x, y = e
        c0, c1 = self.min_poly
        return x * x - c1 * x * y + c0 * y * y


def _hnf_rows(rows):
    """Hermite normal form (a, b, c) of the lattice spanned by (x, y) rows."""
    xs = []
    pivot = None
    for x, y in rows:
        x, y = int(x), int(y)
        if y == 0:
            if x:
                xs.append(x)
            continue
        if pivot is None:
            pivot = (x, y)
            continue
        px, py = pivot
        g, s, t = _xgcd(py, y)
        # unimodular: det [[s, t], [-y/g, py/g]] = 1
        xs.append((py // g) * x - (y // g) * px)
        pivot = (s * px + t * x, g)
    if pivot is None:
        raise ValueError("lattice has rank < 2 (no w component)")
    px, py = pivot
    if py < 0:
        px, py = -px, -py
    a = 0
    for x in xs:
        a = gcd(a, x)
    if a == 0:
        raise ValueError("lattice has rank < 2 (degenerate first column)")
    return a, px % a, py


@dataclass(frozen=True)
class QuadIdeal:
    """A nonzero ideal of Z[w] in HNF: rows (a, 0) and (b, c) over (1, w)."""

    ring: QuadRing
    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if a <= 0 or c <= 0:
            raise ValueError("HNF requires a > 0 and c > 0")
        if not (0 <= b < a):
            raise ValueError("HNF requires 0 <= b < a")
        if a % c or b % c:
            raise ValueError("HNF of an ideal requires c | a and c | b")
        for row in ((a, 0), (b, c)):
            w_row = self.ring.mul_elements(row, (0, 1))
            if not _member(a, b, c, w_row):
                raise ValueError("lattice is not closed under multiplication by w")

    @property
    def hnf(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def norm(self) -> int:
        return self.a * self.c

    @property
    def is_whole(self) -> bool:
        return self.a == 1 and self.c == 1

    def basis(self):
        return ((self.a, 0), (self.b, self.c))

    def unit(self) -> "QuadIdeal":
        return QuadIdeal(self.ring, 1, 0, 1)

    def member(self, element) -> bool:
        return _member(self.a, self.b, self.c, element)

    def contains(self, other) -> bool:
        """Lattice containment: other ⊆ self."""
        if self.ring != other.ring:
            raise ValueError("ideals of different rings")
        return all(self.member(row) for row in other.basis())

    def __mul__(self, other):
        if self.ring != other.ring:
            raise ValueError("ideals of different rings")
        rows = [self.ring.mul_elements(u, v)
                for u in self.basis() for v in other.basis()]
        return QuadIdeal(self.ring, *_hnf_rows(rows))

    def factorization(self, max_norm: int = DEFAULT_MAX_NORM) -> "PrimeFactorization":
        return _factor_quad(self, max_norm)

    def to_dict(self):
        return {"d": self.ring.d, "hnf": [self.a, self.b, self.c]}

    def __repr__(self):
        return f"QuadIdeal(d={self.ring.d}, hnf={list(self.hnf)})"


def _member(a, b, c, element):
    x, y = element
    if y % c:
        return False
    return (x - (y // c) * b) % a == 0


def ideal_from_gens(ring: QuadRing, gens) -> QuadIdeal:
    """The ideal generated by elements given as (x, y) pairs over (1, w)."""
    rows = []
    for g in gens:
        x, y = int(g[0]), int(g[1])
        if x == 0 and y == 0:
            continue
        rows.append((x, y))
        rows.append(ring.mul_elements((x, y), (0, 1)))
    if not rows:
        raise ValueError("the zero ideal is not representable")
    return QuadIdeal(ring, *_hnf_rows(rows))


def principal_ideal(ring: QuadRing, element) -> QuadIdeal:
    return ideal_from_gens(ring, [element])


def whole_ring_ideal(ring: QuadRing) -> QuadIdeal:
    return QuadIdeal(ring, 1, 0, 1)


def ideal_product(i, j):
    return i * j


def ideal_contains(i, j) -> bool:
    return i.contains(j)


def ideal_norm(i) -> int:
    return i.norm


def ideal_sum(i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
    """I + J via the HNF of the stacked bases."""
    if i.ring != j.ring:
        raise ValueError("ideals of different rings")
    return QuadIdeal(i.ring, *_hnf_rows(list(i.basis()) + list(j.basis())))


def primes_above(ring: QuadRing, p: int) -> list[tuple[QuadIdeal, int]]:
    """Kummer-Dedekind splitting of (p): factor the minimal polynomial mod p.

    Returns (prime ideal, ramification exponent) pairs, sorted by HNF, with
    product of P^e over the list equal to (p).  Valid at every prime because
    the order is maximal and monogenic.
    """
    p = int(p)
    if p < 2 or not isprime(p):
        raise ValueError(f"{p} is not a rational prime")
    c0, c1 = ring.min_poly
    if p == 2:
        roots = [r for r in (0, 1) if (r * r + c1 * r + c0) % 2 == 0]
        if len(roots) == 2:
            split_roots = roots
        elif len(roots) == 1:
            # exactly one root of a monic quadratic over GF(2) means a double root
            return [(QuadIdeal(ring, 2, (-roots[0]) % 2, 1), 2)]
        else:
            return [(QuadIdeal(ring, 2, 0, 2), 1)]
    else:
        disc = (c1 * c1 - 4 * c0) % p
        if disc == 0:
            r = (-c1 * pow(2, -1, p)) % p
            return [(QuadIdeal(ring, p, (-r) % p, 1), 2)]
        s = sqrt_mod(disc, p)
        if s is None:
            return [(QuadIdeal(ring, p, 0, p), 1)]
        inv2 = pow(2, -1, p)
        split_roots = [((-c1 + s) * inv2) % p, ((-c1 - s) * inv2) % p]
    primes = sorted((QuadIdeal(ring, p, (-r) % p, 1) for r in split_roots),
                    key=lambda q: q.hnf)
    return [(q, 1) for q in primes]


@dataclass(frozen=True)
class PrimeFactorization:
    """(prime ideal, exponent) pairs sorted by (residue characteristic, HNF)."""

    factors: tuple

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def max_exponent(self) -> int:
        return max((e for _, e in self.factors), default=0)

    def distinct_primes(self):
        return [p for p, _ in self.factors]


@dataclass(frozen=True)
class RadicalChain:
    """Links J1 ⊆ J2 ⊆ ... ⊆ Jn of radical ideals whose product is a given ideal."""

    links: tuple

    def __iter__(self):
        return iter(self.links)

    def __len__(self):
        return len(self.links)

    def product(self):
        if not self.links:
            raise ValueError("empty chain has no well-defined product here")
        out = self.links[0]
        for link in self.links[1:]:
            out = out * link
        return out


def _exponent_in(ideal, prime):
    """Greatest k with ideal ⊆ prime^k, by containment iteration."""
    n = ideal.norm
    e = 0
    power = prime
    while power.norm <= n:
        if not power.contains(ideal):
            break
        e += 1
        power = power * prime
    return e


def _factor_quad(ideal, max_norm):
    n = ideal.norm
    if n == 1:
        return PrimeFactorization(())
    fac = factor_int(n, max_norm)
    factors = []
    recomposed = ideal.unit()
    for p in sorted(fac):
        for prime, _ram in primes_above(ideal.ring, p):
            e = _exponent_in(ideal, prime)
            if e:
                factors.append((prime, e))
                for _ in range(e):
                    recomposed = recomposed * prime
    if recomposed != ideal:
        raise ArithmeticError(
            f"prime factorization of {ideal!r} failed to re-multiply")
    return PrimeFactorization(tuple(factors))


def factor_ideal(i, max_norm: int = DEFAULT_MAX_NORM) -> PrimeFactorization:
    """Prime factorization with exponents found by containment iteration."""
    return i.factorization(max_norm)


def _product_of(ideals, unit):
    out = unit
    for i in ideals:
        out = out * i
    return out


def radical(i, max_norm: int = DEFAULT_MAX_NORM):
    """Product of the distinct primes dividing the ideal."""
    pf = i.factorization(max_norm)
    return _product_of(pf.distinct_primes(), i.unit())


def vn(i, n: int, max_norm: int = DEFAULT_MAX_NORM):
    """Primes P with I ⊆ P^n, read off the factorization exponents."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [p for p, e in i.factorization(max_norm) if e >= n]


def primes_containing(i, max_norm: int = DEFAULT_MAX_NORM):
    """V(I) by direct containment scan over the primes above norm divisors.

    Deliberately avoids the exponent bookkeeping of `vn`, so it can serve
    as an independent route when cross-checking V(J_k) = V_k(I).
    """
    out = []
    if isinstance(i, IntIdeal):
        for p in sorted(factor_int(i.n, max_norm)):
            cand = IntIdeal(p)
            if cand.contains(i):
                out.append(cand)
        return out
    for p in sorted(factor_int(i.norm, max_norm)):
        for prime, _ in primes_above(i.ring, p):
            if prime.contains(i):
                out.append(prime)
    return out


def sp_factor(i, allow_unit: bool = False,
              max_norm: int = DEFAULT_MAX_NORM) -> RadicalChain:
    """The ascending radical chain J1 ⊆ ... ⊆ Jn with product equal to I.

    J_k multiplies the primes whose exponent is at least k, so the chain
    re-multiplies to I exactly; the unit ideal is rejected unless
    `allow_unit` asks for the explicit empty chain.
    """
    if i.is_whole:
        if allow_unit:
            return RadicalChain(())
        raise ValueError("the unit ideal has no radical chain (pass allow_unit=True)")
    pf = i.factorization(max_norm)
    links = []
    for k in range(1, pf.max_exponent + 1):
        primes = [p for p, e in pf if e >= k]
        links.append(_product_of(primes, i.unit()))
    chain = RadicalChain(tuple(links))
    product = chain.product()
    if product != i:
        raise ArithmeticError("radical chain failed to re-multiply to its ideal")
    for lower, upper in zip(chain.links, chain.links[1:]):
        if not upper.contains(lower):
            raise ArithmeticError("radical chain is not ascending")
    return chain


def normalize_factorization(ring, factors,
                            max_norm: int = DEFAULT_MAX_NORM) -> RadicalChain:
    """Canonical ascending chain with the same product as the given radical ideals."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    unit = factors[0].unit()
    for idx, f in enumerate(factors):
        if f.ring != ring:
            raise ValueError(f"factor {idx} belongs to a different ring")
        if f.is_whole:
            raise ValueError(f"factor {idx} is the unit ideal, not a proper radical")
        if radical(f, max_norm) != f:
            raise ValueError(f"factor {idx} is not a radical ideal")
    return sp_factor(_product_of(factors, unit), max_norm=max_norm)


def verify_chain(chain: RadicalChain, ideal=None,
                 max_norm: int = DEFAULT_MAX_NORM) -> dict[str, bool]:
    """Re-check every RadicalChain invariant; used by reports and tests."""
    links = list(chain.links)
    checks = {
        "ascending": all(b.contains(a) for a, b in zip(links, links[1:])),
        "links_radical": all(radical(l, max_norm) == l for l in links),
        "links_proper": all(not l.is_whole for l in links),
    }
    if ideal is not None:
        checks["product_matches"] = bool(links) and chain.product() == ideal
    return checks


class IntRing:
    """The rational integers, as the degenerate one-dimensional instance."""

    label = "Z"

    def __repr__(self):
        return "IntRing()"

    def __eq__(self, other):
        return isinstance(other, IntRing)

    def __hash__(self):
        return hash("IntRing")


INT_RING = IntRing()


@dataclass(frozen=True)
class IntIdeal:
    """The ideal nZ, identified with its positive generator n."""

    n: int

    ring: ClassVar[IntRing] = INT_RING

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("generator must be a positive integer")

    @property
    def norm(self) -> int:
        return self.n

    @property
    def is_whole(self) -> bool:
        return self.n == 1

    def unit(self) -> "IntIdeal":
        return IntIdeal(1)

    def contains(self, other) -> bool:
        return other.n % self.n == 0

    def __mul__(self, other):
        return IntIdeal(self.n * other.n)

    def factorization(self, max_norm: int = DEFAULT_MAX_NORM) -> PrimeFactorization:
        return PrimeFactorization(tuple(
            (IntIdeal(p), e) for p, e in sorted(factor_int(self.n, max_norm).items())))

    def to_dict(self):
        return {"zint": self.n}

    def __repr__(self):
        return f"IntIdeal({self.n})"
