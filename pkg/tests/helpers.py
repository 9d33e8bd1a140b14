"""Seeded random generators and the surpassing-relation condition checks."""

import random
from fractions import Fraction

from semiwedge.negmod import FreeElement
from semiwedge.semiring import MAXPLUS, NAT, NEG_INF, QPLUS, Pair


def random_scalar(sr, rng, top=6):
    if sr is NAT:
        return rng.randint(0, top)
    if sr is QPLUS:
        return Fraction(rng.randint(0, top * 3), rng.randint(1, 3))
    return NEG_INF if rng.random() < 0.25 else rng.randint(-top, top)


def random_tangible_scalar(sr, rng):
    while True:
        a = random_scalar(sr, rng)
        if not sr.is_zero(a):
            return a


def random_pair(sr, rng):
    return Pair(random_scalar(sr, rng), random_scalar(sr, rng))


def random_tangible(sr, rng):
    a = random_tangible_scalar(sr, rng)
    return Pair(a, sr.zero) if rng.random() < 0.5 else Pair(sr.zero, a)


def random_element(sr, rng, keys=4, size=3):
    return FreeElement(sr, {rng.randrange(keys): random_pair(sr, rng) for _ in range(rng.randint(0, size))})


def random_quasi_zero(sr, rng, keys=4):
    out = {}
    for _ in range(rng.randint(0, 3)):
        c = random_scalar(sr, rng)
        out[rng.randrange(keys)] = sr.circ(c)
    return FreeElement(sr, out)


def system_condition_failures(sr, rng):
    """Run one random instance of every surpassing-relation condition; return the names that fail."""
    bad = []
    u, v, w = (random_element(sr, rng) for _ in range(3))
    up = u.add(random_quasi_zero(sr, rng))
    vp = v.add(random_quasi_zero(sr, rng))
    upp = up.add(random_quasi_zero(sr, rng))
    a = random_tangible(sr, rng)

    # partial order
    if not u.surpassed_by(u):
        bad.append("reflexive")
    if not u.surpassed_by(upp):
        bad.append("transitive")
    if u.surpassed_by(w) and w.surpassed_by(u) and u != w:
        bad.append("antisymmetric")
    if up.surpassed_by(u) and up != u:
        bad.append("antisymmetric")
    if u.surpassed_by(v) and v.surpassed_by(w) and not u.surpassed_by(w):
        bad.append("transitive")
    # (i) additivity
    if not u.add(v).surpassed_by(up.add(vp)):
        bad.append("(i)")
    # (ii) tangible scaling
    if not u.scale(a).surpassed_by(up.scale(a)):
        bad.append("(ii)")
    # (iii) adding a quasi-zero surpasses
    if not u.surpassed_by(up):
        bad.append("(iii)")
    # (iv) negation
    if not u.negate().surpassed_by(up.negate()):
        bad.append("(iv)")
    # (v) tangibles only surpass themselves
    k = rng.randrange(4)
    t1 = FreeElement(sr, {k: random_tangible(sr, rng)})
    t2 = FreeElement(sr, {rng.randrange(4): random_tangible(sr, rng)})
    if t1.surpassed_by(t2) and t1 != t2:
        bad.append("(v)")
    # (vi) unique negation
    zero = FreeElement(sr, {})
    if zero.surpassed_by(t1.add(t2)) and t2 != t1.negate():
        bad.append("(vi)")
    if not zero.surpassed_by(t1.add(t1.negate())):
        bad.append("(vi)")
    return bad


def unique_negation_counterexamples(sr, values):
    """Tangible scalar pairs a, a2 with a + a2 >= 0 but a2 != (-)a."""
    tangibles = [Pair(x, sr.zero) for x in values] + [Pair(sr.zero, x) for x in values]
    out = []
    for a in tangibles:
        for a2 in tangibles:
            if sr.pair_surpasses(sr.pair_zero, sr.pair_add(a, a2)) and not sr.pair_eq(a2, sr.negate(a)):
                out.append((a, a2))
    return out


def seeded(seed):
    return random.Random(seed)
