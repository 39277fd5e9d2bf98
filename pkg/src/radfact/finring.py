"""Finite commutative rings presented by dense element tables.

Elements are canonical indices 0..order-1; `add` and `mul` are immutable
numpy int32 tables.  Every constructor runs the full axiom verification
before returning, so a `FinRing` in hand is always a genuine commutative
unitary ring.  Orders are capped at MAX_ORDER = 4096.

All values are immutable after construction and every operation here is a
pure function of its inputs, so sharing across threads is safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError

MAX_ORDER = 4096


def mask_of(elements) -> int:
    """Pack an iterable of element indices into a bitset integer."""
    m = 0
    for e in elements:
        m |= 1 << int(e)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitset integer into a sorted tuple of element indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _additive_generators(add, zero):
    # Greedy generating set of the additive group; the closure loop also
    # proves that the returned set generates, which the verification below
    # relies on.  Size is at most log2(order).
    n = add.shape[0]
    covered = np.zeros(n, dtype=bool)
    covered[zero] = True
    gens = []
    while not covered.all():
        g = int(np.flatnonzero(~covered)[0])
        gens.append(g)
        covered[g] = True
        while True:
            members = np.flatnonzero(covered)
            covered[add[np.ix_(members, members)].ravel()] = True
            if covered.sum() == members.size:
                break
    return gens


def _verify_group(add, zero, what):
    n = add.shape[0]
    idx = np.arange(n)
    if add.shape != (n, n):
        raise ValueError(f"{what}: addition table is not square")
    if int(add.min()) < 0 or int(add.max()) >= n:
        raise ValueError(f"{what}: addition table entry out of range")
    if not np.array_equal(add, add.T):
        raise ValueError(f"{what}: addition is not commutative")
    if not np.array_equal(add[zero], idx):
        raise ValueError(f"{what}: zero is not an additive identity")
    if not (add == zero).any(axis=1).all():
        raise ValueError(f"{what}: an element has no additive inverse")
    gens = _additive_generators(add, zero)
    # Light's associativity test: elements g with a+(g+b) == (a+g)+b for all
    # a, b form a subsemigroup, so checking a generating set suffices.
    for g in gens:
        if not np.array_equal(add[add[:, g]], add[:, add[g]]):
            raise ValueError(f"{what}: addition is not associative")
    return gens


def _verify_ring_tables(order, add, mul, zero, one):
    if order < 1:
        raise ValueError("ring order must be positive")
    if order > MAX_ORDER:
        raise ResourceLimitError(
            f"ring order {order} exceeds the max-order bound {MAX_ORDER}",
            "max-order", MAX_ORDER)
    if not (0 <= zero < order and 0 <= one < order):
        raise ValueError("zero/one indices out of range")
    if zero == one and order != 1:
        raise ValueError("zero and one coincide in a ring of order > 1")
    gens = _verify_group(add, zero, "ring")
    idx = np.arange(order)
    if mul.shape != (order, order):
        raise ValueError("multiplication table is not square")
    if int(mul.min()) < 0 or int(mul.max()) >= order:
        raise ValueError("multiplication table entry out of range")
    if not np.array_equal(mul, mul.T):
        raise ValueError("multiplication is not commutative")
    if not np.array_equal(mul[one], idx):
        raise ValueError("one is not a multiplicative identity")
    if not (mul[:, zero] == zero).all():
        raise ValueError("zero is not multiplicatively absorbing")
    # Distributivity over an additive generating set extends to all elements
    # by induction (only additive associativity is used), and once it holds
    # the middle-associative elements of mul form an additive subgroup, so
    # the same generators certify multiplicative associativity.
    for g in gens:
        lhs = mul[:, add[:, g]]                    # a * (b + g)
        rhs = add[mul, mul[:, g][:, None]]         # a*b + a*g
        if not np.array_equal(lhs, rhs):
            raise ValueError("multiplication does not distribute over addition")
    for g in gens:
        if not np.array_equal(mul[mul[:, g]], mul[:, mul[g]]):
            raise ValueError("multiplication is not associative")


def _freeze(table):
    t = np.ascontiguousarray(table, dtype=np.int32)
    t.setflags(write=False)
    return t


class FinRing:
    """A finite commutative unitary ring with dense operation tables."""

    __slots__ = ("order", "add", "mul", "zero", "one", "label", "_cache")

    def __init__(self, order, add, mul, zero, one, label=""):
        add = _freeze(add)
        mul = _freeze(mul)
        _verify_ring_tables(order, add, mul, zero, one)
        self.order = int(order)
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.label = label or f"ring{order}"
        self._cache = {}

    def __repr__(self):
        return f"FinRing({self.label!r}, order={self.order})"

    def add_el(self, a, b):
        return int(self.add[a, b])

    def mul_el(self, a, b):
        return int(self.mul[a, b])

    def neg_el(self, a):
        return int(np.flatnonzero(self.add[a] == self.zero)[0])

    def elements(self):
        return range(self.order)

    @property
    def whole_mask(self) -> int:
        return (1 << self.order) - 1


@dataclass(frozen=True)
class ElementSet:
    """A subset of a ring's elements, stored as a bitset."""

    ring: FinRing
    mask: int

    def members(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    def __contains__(self, x) -> bool:
        return bool((self.mask >> int(x)) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")


class FinModule:
    """A finite module over a FinRing, given by an addition and action table."""

    __slots__ = ("ring", "size", "add", "zero", "action", "label")

    def __init__(self, ring, size, add, zero, action, label=""):
        add = _freeze(add)
        action = _freeze(action)
        _verify_group(add, zero, "module")
        n, s = ring.order, size
        if action.shape != (n, s):
            raise ValueError("action table has wrong shape")
        if s and (int(action.min()) < 0 or int(action.max()) >= s):
            raise ValueError("action table entry out of range")
        sx = np.arange(s)
        if not np.array_equal(action[ring.one], sx):
            raise ValueError("1 does not act as the identity")
        for r in range(n):
            row = action[r]
            if not np.array_equal(row[add], add[np.ix_(row, row)]):
                raise ValueError("action is not additive in the module argument")
            if not np.array_equal(action[ring.add[r]], add[row[None, :], action]):
                raise ValueError("action is not additive in the ring argument")
            if not np.array_equal(action[ring.mul[r]], row[action]):
                raise ValueError("action does not respect ring multiplication")
        self.ring = ring
        self.size = int(size)
        self.add = add
        self.zero = int(zero)
        self.action = action
        self.label = label or f"mod{size}"

    def __repr__(self):
        return f"FinModule({self.label!r}, size={self.size}, over={self.ring.label!r})"


def make_zn(n: int) -> FinRing:
    """The ring of integers modulo n, with representatives 0..n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FinRing(n, add, mul, zero=0, one=1 % n, label=f"Z{n}")


def _is_canonical_zn(ring):
    n = ring.order
    idx = np.arange(n, dtype=np.int64)
    return (ring.zero == 0 and ring.one == 1 % n
            and np.array_equal(ring.add, (idx[:, None] + idx[None, :]) % n)
            and np.array_equal(ring.mul, (idx[:, None] * idx[None, :]) % n))


def _format_int_poly(coeffs):
    # lowest degree first, integer coefficients
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0 and not (k == 0 and not terms):
            continue
        if k == 0:
            terms.append(str(c))
        else:
            xs = "x" if k == 1 else f"x^{k}"
            terms.append(xs if c == 1 else f"{c}*{xs}")
    return "+".join(terms) if terms else "0"


def make_poly_quotient(base: FinRing, f) -> FinRing:
    """Quotient Z_n[x]/(f) for a monic f, given lowest-degree-first coefficients."""
    if not _is_canonical_zn(base):
        raise ValueError("base ring must be a canonical Z/n ring built by make_zn")
    n = base.order
    f = [int(c) % n for c in f]
    d = len(f) - 1
    if d < 1:
        raise ValueError("modulus must have degree >= 1")
    if f[d] != 1 % n:
        raise ValueError("modulus must be monic")
    order = n ** d
    if order > MAX_ORDER:
        raise ResourceLimitError(
            f"quotient order {order} exceeds the max-order bound {MAX_ORDER}",
            "max-order", MAX_ORDER)

    # residues of x^j mod f for j < 2d-1, as coefficient rows
    width = max(2 * d - 1, d)
    red = np.zeros((width, d), dtype=np.int64)
    red[:d] = np.eye(d, dtype=np.int64)
    top = np.array([(-c) % n for c in f[:d]], dtype=np.int64)
    for j in range(d, width):
        prev = red[j - 1]
        shifted = np.concatenate(([0], prev[:-1]))
        red[j] = (shifted + prev[d - 1] * top) % n

    pw = n ** np.arange(d, dtype=np.int64)
    ee = np.arange(order, dtype=np.int64)
    digits = (ee[:, None] // pw[None, :]) % n          # (order, d)

    add = np.empty((order, order), dtype=np.int32)
    mul = np.empty_like(add)
    for a in range(order):
        arow = digits[a]
        add[a] = ((arow[None, :] + digits) % n) @ pw
        conv = np.zeros((order, width), dtype=np.int64)
        for i in range(d):
            if arow[i]:
                conv[:, i:i + d] += arow[i] * digits
        res = (conv % n) @ red % n
        mul[a] = res @ pw
    label = f"Z{n}[x]/({_format_int_poly(f)})"
    return FinRing(order, add, mul, zero=0, one=1 % order, label=label)


def make_product(a: FinRing, b: FinRing) -> FinRing:
    """Direct product ring; element (x, y) has index x*b.order + y."""
    oa, ob = a.order, b.order
    order = oa * ob
    if order > MAX_ORDER:
        raise ResourceLimitError(
            f"product order {order} exceeds the max-order bound {MAX_ORDER}",
            "max-order", MAX_ORDER)
    aa = a.add.astype(np.int64)
    am = a.mul.astype(np.int64)
    add = (aa[:, None, :, None] * ob + b.add[None, :, None, :]).reshape(order, order)
    mul = (am[:, None, :, None] * ob + b.mul[None, :, None, :]).reshape(order, order)
    return FinRing(order, add, mul,
                   zero=a.zero * ob + b.zero, one=a.one * ob + b.one,
                   label=f"{a.label} x {b.label}")


def free_module(ring: FinRing, rank: int) -> FinModule:
    """The free module ring^rank with componentwise action."""
    if rank < 0:
        raise ValueError("rank must be >= 0")
    n = ring.order
    size = n ** rank
    if size > MAX_ORDER:
        raise ResourceLimitError(
            f"module size {size} exceeds the max-order bound {MAX_ORDER}",
            "max-order", MAX_ORDER)
    pw = n ** np.arange(rank, dtype=np.int64)
    ee = np.arange(size, dtype=np.int64)
    digits = (ee[:, None] // pw[None, :]) % n if rank else ee[:, None][:, :0]
    add = np.zeros((size, size), dtype=np.int64)
    for x in range(size):
        add[x] = ring.add[digits[x][None, :], digits].astype(np.int64) @ pw
    action = np.zeros((n, size), dtype=np.int64)
    for r in range(n):
        action[r] = ring.mul[r][digits] @ pw
    return FinModule(ring, size, add, 0, action, label=f"{ring.label}^{rank}")


def module_from_ring(ring: FinRing) -> FinModule:
    """The ring viewed as a module over itself."""
    m = free_module(ring, 1)
    m.label = f"{ring.label} (self)"
    return m


def zero_module(ring: FinRing) -> FinModule:
    return free_module(ring, 0)


def quotient_module(ring: FinRing, ideal) -> FinModule:
    """The cyclic module ring/I, with cosets labelled by least representatives."""
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")
    members = np.array(ideal.elements, dtype=np.intp)
    reps = ring.add[:, members].min(axis=1)
    keep = np.unique(reps)
    pos = np.full(ring.order, -1, dtype=np.int64)
    pos[keep] = np.arange(keep.size)
    add = pos[reps[ring.add[np.ix_(keep, keep)]]]
    action = pos[reps[ring.mul[:, keep]]]
    zero = int(pos[reps[ring.zero]])
    return FinModule(ring, keep.size, add, zero, action,
                     label=f"{ring.label}/I{len(members)}")


def make_idealization(a: FinRing, e: FinModule) -> FinRing:
    """The idealization of a module: pairs (r, m) with (r,m)(s,n) = (rs, rn+sm).

    The embedded copy of the module squares to zero, which is what produces
    the non-semiprimary examples this package exists to analyze.
    """
    if e.ring is not a:
        raise ValueError("module is not over the given ring")
    oa, s = a.order, e.size
    order = oa * s
    if order > MAX_ORDER:
        raise ResourceLimitError(
            f"idealization order {order} exceeds the max-order bound {MAX_ORDER}",
            "max-order", MAX_ORDER)
    aa = a.add.astype(np.int64)
    am = a.mul.astype(np.int64)
    act = e.action
    add = (aa[:, None, :, None] * s + e.add[None, :, None, :]).reshape(order, order)
    # cross[r1, m1, r2, m2] = e.add[act[r1, m2], act[r2, m1]]
    cross = e.add[act[:, None, None, :], act.T[None, :, :, None]]
    mul = (am[:, None, :, None] * s + cross).reshape(order, order)
    return FinRing(order, add, mul,
                   zero=a.zero * s + e.zero, one=a.one * s + e.zero,
                   label=f"{a.label}(+){e.label}")


def quotient(a: FinRing, ideal) -> FinRing:
    """The factor ring a/I on least coset representatives."""
    if ideal.ring is not a:
        raise ValueError("ideal belongs to a different ring")
    members = np.array(ideal.elements, dtype=np.intp)
    reps = a.add[:, members].min(axis=1)
    keep = np.unique(reps)
    pos = np.full(a.order, -1, dtype=np.int64)
    pos[keep] = np.arange(keep.size)
    qadd = pos[reps[a.add[np.ix_(keep, keep)]]]
    qmul = pos[reps[a.mul[np.ix_(keep, keep)]]]
    return FinRing(keep.size, qadd, qmul,
                   zero=int(pos[reps[a.zero]]), one=int(pos[reps[a.one]]),
                   label=f"{a.label}/I{len(members)}")


def regular_elements(a: FinRing) -> ElementSet:
    """Elements x with xy = 0 only for y = 0; in a finite ring these are the units."""
    counts = (a.mul == a.zero).sum(axis=1)
    return ElementSet(a, mask_of(np.flatnonzero(counts == 1)))


def units(a: FinRing) -> ElementSet:
    return ElementSet(a, mask_of(np.flatnonzero((a.mul == a.one).any(axis=1))))


def idempotents(a: FinRing) -> tuple[int, ...]:
    idx = np.arange(a.order)
    return tuple(int(e) for e in idx[a.mul.diagonal() == idx])


def _subring_of_idempotent(a, e):
    members = np.unique(a.mul[e])
    pos = np.full(a.order, -1, dtype=np.int64)
    pos[members] = np.arange(members.size)
    sadd = pos[a.add[np.ix_(members, members)]]
    smul = pos[a.mul[np.ix_(members, members)]]
    return FinRing(members.size, sadd, smul,
                   zero=int(pos[a.zero]), one=int(pos[e]),
                   label=f"{a.label}|e={e}")


def decompose_local(a: FinRing) -> list[FinRing]:
    """Split a into its local factors eA along the primitive idempotents.

    The zero ring decomposes into an empty product.  Factors come back
    sorted by their idempotent's element index.
    """
    idems = idempotents(a)
    prim = []
    for e in idems:
        if e == a.zero:
            continue
        below = [f for f in idems if a.mul_el(e, f) == f]
        if all(f in (a.zero, e) for f in below):
            prim.append(e)
    acc = a.zero
    for i, e in enumerate(prim):
        for f in prim[i + 1:]:
            assert a.mul_el(e, f) == a.zero, "primitive idempotents not orthogonal"
        acc = a.add_el(acc, e)
    assert acc == a.one, "primitive idempotents do not sum to 1"
    return [_subring_of_idempotent(a, e) for e in sorted(prim)]


@dataclass
class SpecialPrimaryVerdict:
    is_special_primary: bool
    maximal_ideal: object | None      # FinIdeal when the ring is local
    nilpotency_index: int | None      # least t with M^t = 0


def is_special_primary(a: FinRing) -> SpecialPrimaryVerdict:
    """Decide whether every proper ideal of a is a power of a unique maximal ideal."""
    from .finideal import all_ideals, ideal_product

    ideals = all_ideals(a)
    whole = a.whole_mask
    proper = [i for i in ideals if i.mask != whole]
    maximal = [i for i in proper
               if not any(j.mask != i.mask and i.mask & ~j.mask == 0 for j in proper)]
    if len(maximal) != 1:
        return SpecialPrimaryVerdict(False, None, None)
    m = maximal[0]
    zero_mask = 1 << a.zero
    power_masks = {m.mask}
    cur, t = m, 1
    while cur.mask != zero_mask:
        cur = ideal_product(cur, m)
        power_masks.add(cur.mask)
        t += 1
        if t > a.order:
            raise ArithmeticError("maximal ideal of a finite local ring failed to nilpotate")
    ok = {i.mask for i in proper} == power_masks
    return SpecialPrimaryVerdict(ok, m, t)


def ring_to_dict(a: FinRing) -> dict:
    return {
        "label": a.label,
        "order": a.order,
        "zero": a.zero,
        "one": a.one,
        "add": a.add.tolist(),
        "mul": a.mul.tolist(),
    }


def _module_from_dict(ring, obj):
    if obj == "self":
        return module_from_ring(ring)
    if isinstance(obj, dict) and "rank" in obj:
        return free_module(ring, int(obj["rank"]))
    raise ValueError(f"unrecognized module description: {obj!r}")


def ring_from_dict(obj, max_order: int = MAX_ORDER) -> FinRing:
    """Build a ring from its JSON form: full tables or a constructor shorthand."""
    if not isinstance(obj, dict):
        raise ValueError("ring description must be a JSON object")
    if "zn" in obj:
        _check_order(int(obj["zn"]), max_order)
        return make_zn(int(obj["zn"]))
    if "poly_quotient" in obj:
        spec = obj["poly_quotient"]
        base = ring_from_dict(spec.get("base", {"zn": spec.get("zn")}), max_order)
        f = spec["f"]
        _check_order(base.order ** (len(f) - 1), max_order)
        return make_poly_quotient(base, f)
    if "product" in obj:
        parts = [ring_from_dict(p, max_order) for p in obj["product"]]
        if not parts:
            raise ValueError("product of zero rings is not supported")
        out = parts[0]
        for p in parts[1:]:
            _check_order(out.order * p.order, max_order)
            out = make_product(out, p)
        return out
    if "idealization" in obj:
        spec = dict(obj["idealization"])
        if "zn" in spec and "ring" not in spec:
            spec["ring"] = {"zn": spec.pop("zn")}
        ring = ring_from_dict(spec["ring"], max_order)
        if "module_rank" in spec:
            module = free_module(ring, int(spec["module_rank"]))
        else:
            module = _module_from_dict(ring, spec.get("module", "self"))
        _check_order(ring.order * module.size, max_order)
        return make_idealization(ring, module)
    needed = {"order", "zero", "one", "add", "mul"}
    if needed <= obj.keys():
        _check_order(int(obj["order"]), max_order)
        return FinRing(int(obj["order"]), np.array(obj["add"]), np.array(obj["mul"]),
                       int(obj["zero"]), int(obj["one"]), obj.get("label", ""))
    raise ValueError(f"unrecognized ring description with keys {sorted(obj.keys())}")


def _check_order(order, max_order):
    if order > max_order:
        raise ResourceLimitError(
            f"ring order {order} exceeds the max-order bound {max_order}",
            "max-order", max_order)
