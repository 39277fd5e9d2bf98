import os
import random

import pytest

from radfact import quadring as q

SEED = int(os.environ.get("RADFACT_SEED", "20260811"))

SUPPORTED_D = (-1, -2, -5, -7, 2, 3, 5)


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_quad_ideal(rng, ring, max_norm=10 ** 6):
    """A random nonzero proper ideal with norm at most max_norm."""
    while True:
        kind = rng.randrange(3)
        try:
            if kind == 0:
                g = (rng.randint(-300, 300), rng.randint(-300, 300))
                if g == (0, 0):
                    continue
                ideal = q.principal_ideal(ring, g)
            elif kind == 1:
                m = rng.randint(2, 400)
                g = (rng.randint(-20, 20), rng.randint(-20, 20))
                ideal = q.ideal_from_gens(ring, [(m, 0), g])
            else:
                ideal = q.whole_ring_ideal(ring)
                for _ in range(rng.randint(1, 3)):
                    p = rng.choice([2, 3, 5, 7, 11, 13])
                    primes = q.primes_above(ring, p)
                    prime, _ = primes[rng.randrange(len(primes))]
                    for _ in range(rng.randint(1, 3)):
                        if ideal.norm * prime.norm > max_norm:
                            break
                        ideal = ideal * prime
        except ValueError:
            continue
        if not ideal.is_whole and ideal.norm <= max_norm:
            return ideal


def random_radical_quad_ideal(rng, ring, max_norm=10 ** 6):
    """A random proper radical ideal: a product of distinct primes."""
    while True:
        ideal = q.whole_ring_ideal(ring)
        seen = set()
        for p in rng.sample([2, 3, 5, 7, 11, 13, 17, 19], rng.randint(1, 3)):
            primes = q.primes_above(ring, p)
            prime, _ = primes[rng.randrange(len(primes))]
            if prime.hnf in seen or ideal.norm * prime.norm > max_norm:
                continue
            seen.add(prime.hnf)
            ideal = ideal * prime
        if not ideal.is_whole:
            return ideal


def random_zpi_ideal(rng):
    """A random non-unit ideal of a random mixed ZPI ring."""
    from radfact import zpicompose as z

    comps = [z.SprComponent(rng.randint(1, 3)) for _ in range(rng.randint(1, 2))]
    ded_rings = [q.QuadRing(-1), q.QuadRing(-5), q.QuadRing(5), q.IntRing()]
    comps += [z.DedComponent(rng.choice(ded_rings)) for _ in range(rng.randint(1, 2))]
    rng.shuffle(comps)
    ring = z.ZpiRing(tuple(comps))
    while True:
        entries = []
        for comp in ring.components:
            if isinstance(comp, z.SprComponent):
                entries.append(rng.randint(0, comp.t))
            elif isinstance(comp.ring, q.IntRing):
                entries.append(q.IntIdeal(rng.randint(1, 4000)))
            elif rng.random() < 0.2:
                entries.append(q.whole_ring_ideal(comp.ring))
            else:
                entries.append(random_quad_ideal(rng, comp.ring, 10 ** 4))
        ideal = z.ZpiIdeal(ring, tuple(entries))
        if not ideal.is_unit:
            return ideal
