"""The exterior semialgebra on x^0, x^1, ... with switch negation.

A basis wedge is stored as its strictly decreasing exponent tuple, so
``(5, 3, 1)`` is x^5 ^ x^3 ^ x^1, the element written [x]^3_(3,2,1).  The
empty tuple is the unit.  Reordering factors folds the sign of the
permutation into the pair coefficient; a repeated factor kills the term.
"""

from functools import lru_cache
from typing import NamedTuple

from .negmod import FreeElement
from .partitions import Partition, exponent_tuple, exponents_to_partition, sort_with_sign
from .semiring import Pair, get_semiring


@lru_cache(maxsize=1 << 20)
def concat_sign(a, b):
    """Canonical form of the juxtaposition of two descending exponent tuples."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    return sort_with_sign(a + b)


class WedgeElement(FreeElement):
    """A sparse combination of basis wedges with an optional rank bound n.

    With a finite n every x^k with k >= n is zero, so stored keys only use
    exponents below n.
    """

    __slots__ = ("n",)

    def __init__(self, sr, coeffs=None, n=None, _clean=False):
        sr = get_semiring(sr)
        if coeffs is not None and not _clean:
            out = {}
            for key, c in dict(coeffs).items():
                sign, canon = sort_with_sign(tuple(key))
                if sign == 0 or (n is not None and canon and canon[0] >= n):
                    continue
                c = sr.signed(Pair(*c), sign)
                out[canon] = sr.pair_add(out[canon], c) if canon in out else c
            coeffs = out
        super().__init__(sr, coeffs, _clean=_clean)
        self.n = n

    def _new(self, coeffs):
        return WedgeElement(self.sr, coeffs, self.n, _clean=True)

    @classmethod
    def basis(cls, sr, exponents, n=None, coeff=None):
        """The wedge x^{e1} ^ x^{e2} ^ ... in any order; reordering signs are applied."""
        sr = get_semiring(sr)
        return cls(sr, {tuple(exponents): sr.pair_one if coeff is None else coeff}, n)

    @classmethod
    def from_partition(cls, sr, r, lam, n=None):
        return cls.basis(sr, exponent_tuple(r, lam), n)

    @classmethod
    def scalar(cls, sr, coeff, n=None):
        return cls(sr, {(): coeff}, n)

    @classmethod
    def one(cls, sr, n=None):
        return cls.basis(sr, (), n)

    @classmethod
    def vector(cls, sr, coords, n=None):
        """sum_i coords[i] x^i, with pair coefficients."""
        return cls(sr, {(i,): c for i, c in coords.items()}, n)

    def terms(self):
        """Yield (degree, partition, pair) for each stored term."""
        for key, c in self.coeffs.items():
            yield len(key), exponents_to_partition(key), c

    def degrees(self):
        return sorted({len(k) for k in self.coeffs})

    def __repr__(self):
        return f"WedgeElement({self.sr.id}, {to_text(self)!r})"

    def __xor__(self, other):
        return wedge(self, other)

    def to_json(self):
        return {"semiring": self.sr.id, "n": self.n,
                "terms": {format_key(k): [self.sr.format_scalar(c[0]), self.sr.format_scalar(c[1])]
                          for k, c in sorted_terms(self)}}

    @classmethod
    def from_json(cls, data):
        sr = get_semiring(data["semiring"])
        p = sr.parse_scalar
        return cls(sr, {parse_key(k): Pair(p(str(v[0])), p(str(v[1])))
                        for k, v in data["terms"].items()}, data.get("n"))


def format_key(key):
    return "^".join(f"x{e}" for e in key) if key else "1"


def parse_key(text):
    text = text.strip()
    if text == "1":
        return ()
    return tuple(int(part.strip()[1:]) for part in text.split("^"))


def sorted_terms(u):
    return sorted(u.coeffs.items(), key=lambda kc: (len(kc[0]), tuple(-e for e in kc[0])))


def to_text(u):
    """Render as "x6^x1 + x5^x2 + [1,1]x4^x3".

    A negated basis wedge of degree >= 2 prints with its first two factors
    swapped, which is the same element; in degree 0 and 1 it prints as neg(...).
    """
    sr = u.sr
    if not u:
        return "0"
    parts = []
    for key, c in sorted_terms(u):
        mono = format_key(key)
        if sr.pair_eq(c, sr.pair_one):
            parts.append(mono)
        elif sr.pair_eq(c, sr.pair_minus_one):
            if len(key) >= 2:
                parts.append(format_key((key[1], key[0]) + key[2:]))
            else:
                parts.append(f"neg({mono})")
        else:
            parts.append(sr.format_pair(c) + ("" if mono == "1" else mono))
    return " + ".join(parts)


def _require_same(u, v):
    if u.sr is not v.sr:
        raise ValueError(f"semiring mismatch: {u.sr.id} vs {v.sr.id}")


def _bound(u, v):
    if u.n is None:
        return v.n
    if v.n is None:
        return u.n
    return min(u.n, v.n)


def wedge(u, v):
    _require_same(u, v)
    sr = u.sr
    add, mul, zero_test = sr.pair_add, sr.pair_mul, sr.is_pair_zero
    out = {}
    for a, ca in u.coeffs.items():
        for b, cb in v.coeffs.items():
            sign, key = concat_sign(a, b)
            if sign == 0:
                continue
            c = mul(ca, cb)
            if sign < 0:
                c = Pair(c[1], c[0])
            if key in out:
                out[key] = add(out[key], c)
            else:
                out[key] = c
    return WedgeElement(sr, {k: c for k, c in out.items() if not zero_test(c)},
                        _bound(u, v), _clean=True)


def wedge_all(factors, sr=None, n=None):
    factors = list(factors)
    if not factors:
        return WedgeElement.one(sr, n)
    out = factors[0]
    for f in factors[1:]:
        out = wedge(out, f)
    return out


class BilinearForm:
    """A bilinear form on the span of x^0, x^1, ... with pair values.

    ``kind="kronecker"`` gives B(x^i, x^j) = 1 if i == j else 0.  With
    ``kind="explicit"`` the values come from ``entries`` (missing entries
    are 0; with ``symmetric=True`` an entry (i, j) also serves (j, i)).
    Scalar entries are read as tangible pairs (a, 0).
    """

    def __init__(self, sr, entries=None, kind="kronecker", symmetric=True, circ=False):
        self.sr = get_semiring(sr)
        if kind not in ("kronecker", "explicit"):
            raise ValueError(f"unknown form kind {kind!r}")
        self.kind = kind
        self.symmetric = symmetric
        self.circ = circ
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            self.entries[(i, j)] = Pair(*v) if isinstance(v, tuple) else self.sr.pair(v)

    def __repr__(self):
        return f"BilinearForm({self.sr.id}, kind={self.kind}, circ={self.circ})"

    def base_value(self, i, j):
        sr = self.sr
        if self.kind == "kronecker":
            return sr.pair_one if i == j else sr.pair_zero
        v = self.entries.get((i, j))
        if v is None and self.symmetric:
            v = self.entries.get((j, i))
        return sr.pair_zero if v is None else v

    def value(self, i, j):
        """B(x^i, x^j)."""
        v = self.base_value(i, j)
        if self.circ:
            return Pair(v[0], v[0])
        return v

    def is_symmetric_on(self, indices):
        eq = self.sr.pair_eq
        return all(eq(self.value(i, j), self.value(j, i)) for i in indices for j in indices)


def kronecker(sr):
    return BilinearForm(sr)


def make_circ_form(B):
    """B'(x^i, x^j) = B(x^i, x^j)° with tangible base values.  Needs a zero-sum-free base."""
    return BilinearForm(B.sr, B.entries, B.kind, B.symmetric, circ=True)


def circ_form_value(B, v, w):
    """ind(v) ind(w) B(v, w)° for vectors given as {index: scalar}."""
    sr = B.sr
    v = {i: a for i, a in v.items() if not sr.is_zero(a)}
    w = {j: b for j, b in w.items() if not sr.is_zero(b)}
    total = sr.zero
    for i, a in v.items():
        for j, b in w.items():
            total = sr.add(total, sr.mul(sr.mul(a, b), B.base_value(i, j)[0]))
    scale = sr.from_int(len(v) * len(w))
    total = sr.mul(scale, total)
    return Pair(total, total)


def _as_dspec(sr, d):
    if isinstance(d, int):
        return {d: sr.pair_one}
    return dict(d)


def contract(d, u, B=None):
    """The contraction d ⌟ u of a wedge by a dual element.

    ``d`` is an index j (meaning ∂^j) or a dict {j: pair}.  On a basis
    wedge u_1 ^ ... ^ u_k the result is sum_p sign(p) ∂(u_p) (u with u_p
    removed), the first position counting positive.
    """
    sr = u.sr
    B = B or kronecker(sr)
    dspec = _as_dspec(sr, d)
    add, mul, zero_test = sr.pair_add, sr.pair_mul, sr.is_pair_zero
    out = {}
    for key, c in u.coeffs.items():
        for j, cj in dspec.items():
            for pos, b in enumerate(key):
                if B.kind == "kronecker" and b != j:
                    continue
                val = B.value(b, j)
                if zero_test(val):
                    continue
                t = mul(mul(cj, val), c)
                if pos & 1:
                    t = Pair(t[1], t[0])
                rest = key[:pos] + key[pos + 1:]
                out[rest] = add(out[rest], t) if rest in out else t
    return WedgeElement(sr, {k: v for k, v in out.items() if not zero_test(v)}, u.n, _clean=True)


class GlGenerator(NamedTuple):
    """The endomorphism x^i ⊗ ∂^j, v -> x^i ^ (∂^j ⌟ v)."""

    i: int
    j: int
    orientation: int = 1


def apply_gl(g, u, B=None):
    sr = u.sr
    out = wedge(WedgeElement.basis(sr, (g.i,), u.n), contract(g.j, u, B))
    return out if g.orientation > 0 else out.negate()


def _gl_terms(sr, phi):
    """Normalize a gl element to {(i, j): pair}."""
    if isinstance(phi, GlGenerator):
        phi = [phi]
    if isinstance(phi, dict):
        return {k: Pair(*c) for k, c in phi.items()}
    out = {}
    for g in phi:
        c = sr.pair_one if g.orientation > 0 else sr.pair_minus_one
        out[(g.i, g.j)] = sr.pair_add(out[(g.i, g.j)], c) if (g.i, g.j) in out else c
    return out


def gl_image(sr, phi, b, B):
    """phi(x^b) as {i: pair}."""
    out = {}
    for (i, j), c in _gl_terms(sr, phi).items():
        val = B.value(b, j)
        if sr.is_pair_zero(val):
            continue
        t = sr.pair_mul(c, val)
        out[i] = sr.pair_add(out[i], t) if i in out else t
    return out


def delta_extend(phi, u, B=None):
    """The derivation extension of phi: applied to one factor at a time, Leibniz style."""
    sr = u.sr
    B = B or kronecker(sr)
    terms = _gl_terms(sr, phi)
    out = WedgeElement(sr, {}, u.n)
    images = {}
    for key, c in u.coeffs.items():
        acc = {}
        for pos, b in enumerate(key):
            if b not in images:
                images[b] = gl_image(sr, terms, b, B)
            for i, ci in images[b].items():
                new = key[:pos] + (i,) + key[pos + 1:]
                t = sr.pair_mul(ci, c)
                acc[new] = sr.pair_add(acc[new], t) if new in acc else t
        out = out.add(WedgeElement(sr, acc, u.n))
    return out


def gl_compose(sr, phi, psi, B=None):
    """The endomorphism phi∘psi as a gl element: (x^a⊗∂^b)(x^c⊗∂^d) = B(x^c,x^b) x^a⊗∂^d."""
    B = B or kronecker(sr)
    out = {}
    for (a, b), c1 in _gl_terms(sr, phi).items():
        for (c, d), c2 in _gl_terms(sr, psi).items():
            val = B.value(c, b)
            if sr.is_pair_zero(val):
                continue
            t = sr.pair_mul(sr.pair_mul(c1, c2), val)
            out[(a, d)] = sr.pair_add(out[(a, d)], t) if (a, d) in out else t
    return {k: v for k, v in out.items() if not sr.is_pair_zero(v)}


def gl_bracket(sr, phi, psi, B=None):
    """[phi, psi] = phi psi (-) psi phi."""
    left = gl_compose(sr, phi, psi, B)
    right = gl_compose(sr, psi, phi, B)
    out = dict(left)
    for k, c in right.items():
        c = sr.negate(c)
        out[k] = sr.pair_add(out[k], c) if k in out else c
    return out


def check_commutations(i, j, u, B=None, crossed=False):
    """The three anticommutation rules for x^i, x^j, ∂_i, ∂_j on u.

    Returns the verdicts for
      x^i^x^j^u + x^j^x^i^u >= 0,
      ∂_i⌟(∂_j⌟u) + ∂_j⌟(∂_i⌟u) >= 0,
      ∂_j⌟(x^i^u) + x^i^(∂_j⌟u) >= δ_ij B(x^i,x^j) u.
    With ``crossed=True`` the third rule is evaluated with the other index
    pattern, ∂_i⌟(x^j^u) + x^i^(∂_j⌟u).
    """
    sr = u.sr
    B = B or kronecker(sr)
    n = u.n
    xi = WedgeElement.basis(sr, (i,), n)
    xj = WedgeElement.basis(sr, (j,), n)
    zero = u.zero()
    first = wedge(xi, wedge(xj, u)).add(wedge(xj, wedge(xi, u)))
    second = contract(i, contract(j, u, B), B).add(contract(j, contract(i, u, B), B))
    if crossed:
        third = contract(i, wedge(xj, u), B).add(wedge(xi, contract(j, u, B)))
    else:
        third = contract(j, wedge(xi, u), B).add(wedge(xi, contract(j, u, B)))
    target = u.scale(B.value(i, j)) if i == j else zero
    return (zero.surpassed_by(first), zero.surpassed_by(second), target.surpassed_by(third))


def type2_reduce(u):
    """Cancel balanced parts of every coefficient (N and Q>=0 only)."""
    sr = u.sr
    out = {}
    for k, c in u.coeffs.items():
        r = sr.reduce_pair(c)
        if not sr.is_pair_zero(r):
            out[k] = r
    return WedgeElement(sr, out, u.n, _clean=True)


def tangible_part(u):
    """Drop the quasi-zero terms after cancelling balanced parts."""
    return type2_reduce(u)


def irreducibility_smoke(u, generators, steps, B=None):
    """Apply generators repeatedly; return the largest degree reached.

    A nonzero u under x^i ⊗ ∂^j type generators together with plain wedging
    by x^i reaches every degree up to ``steps`` above its own.
    """
    sr = u.sr
    current = u
    top = max(u.degrees(), default=0)
    for _ in range(steps):
        nxt = current.zero()
        for g in generators:
            if isinstance(g, int):
                nxt = nxt.add(wedge(WedgeElement.basis(sr, (g,), u.n), current))
            else:
                nxt = nxt.add(apply_gl(g, current, B))
        if not nxt:
            break
        current = nxt
        top = max(top, max(current.degrees()))
    return top


__all__ = [
    "WedgeElement", "BilinearForm", "GlGenerator", "wedge", "wedge_all", "contract",
    "apply_gl", "delta_extend", "check_commutations", "make_circ_form", "circ_form_value",
    "kronecker", "type2_reduce", "tangible_part", "gl_compose", "gl_bracket", "to_text",
    "format_key", "parse_key", "Partition", "concat_sign",
]
