"""Truncated Laurent series in z and w with wedge coefficients, and
Hasse-Schmidt derivations acting on them.

A series knows, per variable, up to which degree its coefficients are
reliable (``zprec`` / ``wprec``, ``None`` meaning exact).  Products and
operator applications propagate these bounds the way truncated Laurent
series do, so a coefficient beyond the bound is never reported as fact.
"""

import math
from fractions import Fraction
from typing import NamedTuple

from .exterior import (BilinearForm, WedgeElement, concat_sign, contract, format_key,
                       kronecker, parse_key, to_text)
from .negmod import EndoMatrix
from .semiring import Pair, QPLUS, get_semiring

INF = math.inf


def _min_prec(*ps):
    vals = [p for p in ps if p is not None and p != INF]
    return min(vals) if vals else None


class BiSeries:
    """Sparse map (zdeg, wdeg) -> wedge coefficients, with per-variable precision."""

    __slots__ = ("sr", "terms", "zprec", "wprec", "n")

    def __init__(self, sr, terms=None, zprec=None, wprec=None, n=None, _clean=False):
        self.sr = get_semiring(sr)
        self.zprec = None if zprec == INF else zprec
        self.wprec = None if wprec == INF else wprec
        self.n = n
        if terms is None:
            terms = {}
        elif not _clean:
            zero = self.sr.is_pair_zero
            clean = {}
            for zw, inner in terms.items():
                if isinstance(inner, WedgeElement):
                    inner = inner.coeffs
                if not self._inside(zw):
                    continue
                inner = {k: c for k, c in inner.items() if not zero(c)}
                if inner:
                    clean[zw] = inner
            terms = clean
        self.terms = terms

    def _inside(self, zw):
        z, w = zw
        return ((self.zprec is None or z <= self.zprec)
                and (self.wprec is None or w <= self.wprec))

    def _new(self, terms, zprec, wprec):
        return BiSeries(self.sr, terms, zprec, wprec, self.n)

    @classmethod
    def from_wedge(cls, u, z=0, w=0):
        return cls(u.sr, {(z, w): dict(u.coeffs)}, n=u.n)

    @classmethod
    def monomial(cls, sr, z=0, w=0, coeff=None, key=(), n=None):
        sr = get_semiring(sr)
        return cls(sr, {(z, w): {key: sr.pair_one if coeff is None else coeff}}, n=n)

    @property
    def exact(self):
        return (self.zprec is None, self.wprec is None)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return sum(len(v) for v in self.terms.values())

    def items(self):
        for zw in sorted(self.terms):
            yield zw, WedgeElement(self.sr, self.terms[zw], self.n, _clean=True)

    def coefficient(self, z, w=0):
        if not self.is_known(z, w):
            raise ValueError(f"coefficient of z^{z} w^{w} lies beyond the known window")
        return WedgeElement(self.sr, dict(self.terms.get((z, w), {})), self.n, _clean=True)

    def is_known(self, z, w=0):
        return self._inside((z, w))

    def valuation(self, var):
        idx = 0 if var == "z" else 1
        if self.terms:
            return min(zw[idx] for zw in self.terms)
        prec = self.zprec if var == "z" else self.wprec
        return INF if prec is None else prec + 1

    def window(self):
        """(zmin, zmax, wmin, wmax) of the stored or known range."""
        if self.terms:
            zs = [zw[0] for zw in self.terms]
            ws = [zw[1] for zw in self.terms]
            zmin, zmax, wmin, wmax = min(zs), max(zs), min(ws), max(ws)
        else:
            zmin = zmax = wmin = wmax = 0
        if self.zprec is not None:
            zmax = self.zprec
        if self.wprec is not None:
            wmax = self.wprec
        return (zmin, zmax, wmin, wmax)

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.sr is other.sr and self.zprec == other.zprec and self.wprec == other.wprec
                and _terms_equal(self.sr, self.terms, other.terms))

    __hash__ = None

    def __repr__(self):
        return f"BiSeries({self.sr.id}, {len(self)} terms, window={self.window()}, exact={self.exact})"

    # arithmetic

    def add(self, other):
        _same(self, other)
        zp = _min_prec(self.zprec, other.zprec)
        wp = _min_prec(self.wprec, other.wprec)
        sr = self.sr
        out = {zw: dict(inner) for zw, inner in self.terms.items()}
        for zw, inner in other.terms.items():
            tgt = out.setdefault(zw, {})
            for k, c in inner.items():
                tgt[k] = sr.pair_add(tgt[k], c) if k in tgt else c
        return self._new(out, zp, wp)

    __add__ = add

    def negate(self):
        return BiSeries(self.sr, {zw: {k: Pair(c[1], c[0]) for k, c in inner.items()}
                                  for zw, inner in self.terms.items()},
                        self.zprec, self.wprec, self.n, _clean=True)

    def minus(self, other):
        return self.add(other.negate())

    def scale(self, a):
        sr = self.sr
        return self._new({zw: {k: sr.pair_mul(a, c) for k, c in inner.items()}
                          for zw, inner in self.terms.items()}, self.zprec, self.wprec)

    def shift(self, dz=0, dw=0):
        """Multiply by z^dz w^dw."""
        return BiSeries(self.sr, {(z + dz, w + dw): inner for (z, w), inner in self.terms.items()},
                        None if self.zprec is None else self.zprec + dz,
                        None if self.wprec is None else self.wprec + dw, self.n, _clean=True)

    def wedge(self, other):
        return series_mul(self, other)

    __xor__ = wedge

    def map_coefficients(self, fn):
        """Apply a linear map WedgeElement -> WedgeElement to each coefficient."""
        out = {}
        for zw, inner in self.terms.items():
            image = fn(WedgeElement(self.sr, inner, self.n, _clean=True))
            if image:
                out[zw] = dict(image.coeffs)
        return BiSeries(self.sr, out, self.zprec, self.wprec, self.n, _clean=True)

    def type2_reduce(self):
        sr = self.sr
        out = {}
        for zw, inner in self.terms.items():
            red = {k: sr.reduce_pair(c) for k, c in inner.items()}
            red = {k: c for k, c in red.items() if not sr.is_pair_zero(c)}
            if red:
                out[zw] = red
        return BiSeries(sr, out, self.zprec, self.wprec, self.n, _clean=True)

    # serialization

    def to_json(self):
        fmt = self.sr.format_scalar
        terms = []
        for (z, w) in sorted(self.terms):
            inner = self.terms[(z, w)]
            value = {format_key(k): [fmt(c[0]), fmt(c[1])]
                     for k, c in sorted(inner.items(), key=lambda kc: (len(kc[0]), tuple(-e for e in kc[0])))}
            terms.append({"z": z, "w": w, "value": value})
        return {"semiring": self.sr.id, "n": self.n, "terms": terms,
                "window": list(self.window()), "exact": list(self.exact),
                "precision": [self.zprec, self.wprec]}

    @classmethod
    def from_json(cls, data):
        sr = get_semiring(data["semiring"])
        p = sr.parse_scalar
        terms = {}
        for t in data["terms"]:
            terms[(t["z"], t["w"])] = {parse_key(k): Pair(p(str(v[0])), p(str(v[1])))
                                       for k, v in t["value"].items()}
        zprec, wprec = data.get("precision", [None, None])
        return cls(sr, terms, zprec, wprec, data.get("n"))

    def to_text(self, zmax=None, wmax=None):
        lines = []
        for (z, w) in sorted(self.terms):
            if (zmax is not None and z > zmax) or (wmax is not None and w > wmax):
                continue
            u = WedgeElement(self.sr, self.terms[(z, w)], self.n, _clean=True)
            lines.append(f"z^{z} w^{w}: {to_text(u)}")
        ez, ew = self.exact
        lines.append(f"# known through z^{'inf' if ez else self.zprec}, w^{'inf' if ew else self.wprec}")
        return "\n".join(lines)


def _same(a, b):
    if a.sr is not b.sr:
        raise ValueError(f"semiring mismatch: {a.sr.id} vs {b.sr.id}")


def _terms_equal(sr, a, b):
    if a.keys() != b.keys():
        return False
    for zw, inner in a.items():
        other = b[zw]
        if inner.keys() != other.keys():
            return False
        if not all(sr.pair_eq(c, other[k]) for k, c in inner.items()):
            return False
    return True


def _product_prec(pa, va, pb, vb):
    cands = []
    if pa is not None:
        cands.append(pa + vb)
    if pb is not None:
        cands.append(pb + va)
    if not cands:
        return None
    p = min(cands)
    return None if p == INF else p


def _bound(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _mul_terms(sr, ta, tb, zcap, wcap):
    """Cauchy product of raw term maps, dropping degrees above the caps."""
    add, mul, zero = sr.pair_add, sr.pair_mul, sr.is_pair_zero
    out = {}
    for (za, wa), ia in ta.items():
        for (zb, wb), ib in tb.items():
            z, w = za + zb, wa + wb
            if (zcap is not None and z > zcap) or (wcap is not None and w > wcap):
                continue
            tgt = out.get((z, w))
            if tgt is None:
                tgt = out[(z, w)] = {}
            for ka, ca in ia.items():
                for kb, cb in ib.items():
                    sign, key = concat_sign(ka, kb)
                    if sign == 0:
                        continue
                    c = mul(ca, cb)
                    if sign < 0:
                        c = Pair(c[1], c[0])
                    if key in tgt:
                        tgt[key] = add(tgt[key], c)
                    else:
                        tgt[key] = c
    result = {}
    for zw, inner in out.items():
        inner = {k: c for k, c in inner.items() if not zero(c)}
        if inner:
            result[zw] = inner
    return result


def series_mul(a, b):
    """Wedge product of two series, Cauchy style, with precision bookkeeping."""
    _same(a, b)
    zp = _product_prec(a.zprec, a.valuation("z"), b.zprec, b.valuation("z"))
    wp = _product_prec(a.wprec, a.valuation("w"), b.wprec, b.valuation("w"))
    terms = _mul_terms(a.sr, a.terms, b.terms, zp, wp)
    return BiSeries(a.sr, terms, zp, wp, _bound(a.n, b.n), _clean=True)


def series_add(a, b):
    return a.add(b)


def series_scale_monomial(s, zshift=0, wshift=0):
    return s.shift(zshift, wshift)


# derivations

SIGMA_PLUS = "sigma_plus"
SIGMA_MINUS = "sigma_minus"
SIGMA_PLUS_BAR = "sigma_plus_bar"
SIGMA_MINUS_BAR = "sigma_minus_bar"
HS_ENDO = "hs_endo"
HS_ENDO_BAR = "hs_endo_bar"

KINDS = (SIGMA_PLUS, SIGMA_MINUS, SIGMA_PLUS_BAR, SIGMA_MINUS_BAR, HS_ENDO, HS_ENDO_BAR)
_LOWERING = (SIGMA_MINUS, SIGMA_MINUS_BAR)


class Derivation(NamedTuple):
    """A Hasse-Schmidt derivation in one variable.

    sigma_plus:      x^j -> sum_{i>=0} x^{j+i} t^i        (truncated)
    sigma_minus:     x^j -> sum_{i=0}^{j} x^{j-i} t^{-i}
    sigma_plus_bar:  x^j -> x^j (-) x^{j+1} t
    sigma_minus_bar: x^j -> x^j (-) x^{j-1} t^{-1}        (x^0 -> x^0)
    hs_endo:         x^j -> sum_{i>=0} f^i(x^j) t^i       (truncated)
    hs_endo_bar:     x^j -> x^j (-) f(x^j) t
    """

    kind: str
    var: str = "z"
    endo: EndoMatrix = None

    def __repr__(self):
        return f"{self.kind}({self.var})"


def SigmaPlus(var="z"):
    return Derivation(SIGMA_PLUS, var)


def SigmaMinus(var="z"):
    return Derivation(SIGMA_MINUS, var)


def SigmaPlusBar(var="z"):
    return Derivation(SIGMA_PLUS_BAR, var)


def SigmaMinusBar(var="z"):
    return Derivation(SIGMA_MINUS_BAR, var)


def HSFromEndo(f, var="z"):
    return Derivation(HS_ENDO, var, f)


def HSBarFromEndo(f, var="z"):
    return Derivation(HS_ENDO_BAR, var, f)


def _vector_image(sr, d, j, order, n):
    """Image of x^j as ({deg: {exponent: pair}}, precision or None)."""
    one, minus = sr.pair_one, sr.pair_minus_one
    live = (lambda k: k >= 0) if n is None else (lambda k: 0 <= k < n)
    if d.kind == SIGMA_PLUS:
        top = order if n is None else min(order, n - 1 - j)
        terms = {i: {j + i: one} for i in range(top + 1) if live(j + i)}
        exact = n is not None and j + order >= n - 1
        return terms, (None if exact else order)
    if d.kind == SIGMA_MINUS:
        return {-i: {j - i: one} for i in range(j + 1) if live(j - i)}, None
    if d.kind == SIGMA_MINUS_BAR:
        terms = {0: {j: one}} if live(j) else {}
        if j >= 1 and live(j - 1):
            terms[-1] = {j - 1: minus}
        return terms, None
    if d.kind == SIGMA_PLUS_BAR:
        terms = {0: {j: one}} if live(j) else {}
        if live(j + 1):
            terms[1] = {j + 1: minus}
        return terms, None
    f = d.endo
    if f is None or f.sr is not sr:
        raise ValueError("an endomorphism over the same semiring is required")
    if not live(j):
        return {}, None
    col = f.apply_to_basis(j) if j < f.dim else {}
    col = {k: c for k, c in col.items() if live(k)}
    if d.kind == HS_ENDO_BAR:
        terms = {0: {j: one}}
        if col:
            terms[1] = {k: sr.negate(c) for k, c in col.items()}
        return terms, None
    # hs_endo: iterate f on the current vector
    terms = {0: {j: one}}
    current = {j: one}
    for i in range(1, order + 1):
        nxt = {}
        for k, c in current.items():
            if k >= f.dim:
                continue
            for k2, c2 in f.apply_to_basis(k).items():
                if not live(k2):
                    continue
                t = sr.pair_mul(c2, c)
                nxt[k2] = sr.pair_add(nxt[k2], t) if k2 in nxt else t
        nxt = {k: c for k, c in nxt.items() if not sr.is_pair_zero(c)}
        if not nxt:
            return terms, None
        terms[i] = nxt
        current = nxt
    return terms, order


_IMAGE_CACHE = {}


def _basis_image(sr, d, key, order, n):
    """D applied to a basis wedge, as ({deg: {key: pair}}, precision)."""
    ck = (sr.id, d, key, order, n)
    hit = _IMAGE_CACHE.get(ck)
    if hit is not None:
        return hit
    if not key:
        result = ({0: {(): sr.pair_one}}, None)
    else:
        vt, vp = _vector_image(sr, d, key[0], order, n)
        vt = {deg: {(e,): c for e, c in inner.items()} for deg, inner in vt.items()}
        if len(key) == 1:
            result = ({deg: inner for deg, inner in vt.items() if inner}, vp)
        else:
            rt, rp = _basis_image(sr, d, key[1:], order, n)
            va = min(vt) if vt else (INF if vp is None else vp + 1)
            vb = min(rt) if rt else (INF if rp is None else rp + 1)
            prec = _product_prec(vp, va, rp, vb)
            raw = _mul_terms(sr, {(z, 0): i for z, i in vt.items()},
                             {(z, 0): i for z, i in rt.items()}, prec, None)
            result = ({z: inner for (z, _), inner in raw.items()}, prec)
    _IMAGE_CACHE[ck] = result
    return result


def clear_caches():
    _IMAGE_CACHE.clear()


def apply_derivation(d, u, zmax=8):
    """Apply a derivation factorwise to a wedge or a series.

    ``zmax`` is the truncation order for the infinite kinds (sigma_plus and
    hs_endo), counted in the derivation's own variable.
    """
    if isinstance(d, str):
        d = Derivation(d)
    if isinstance(u, WedgeElement):
        u = BiSeries.from_wedge(u)
    sr, n = u.sr, u.n
    var_prec = u.zprec if d.var == "z" else u.wprec
    if var_prec is not None and d.kind in _LOWERING:
        raise ValueError(f"{d!r} lowers the {d.var}-degree and cannot act on a series "
                         f"truncated in {d.var}")
    out = {}
    precs = [var_prec]
    add = sr.pair_add
    for (z, w), inner in u.terms.items():
        base = z if d.var == "z" else w
        for key, c in inner.items():
            img, p = _basis_image(sr, d, key, zmax, n)
            if p is not None:
                precs.append(base + p)
            for deg, ik in img.items():
                zw = (z + deg, w) if d.var == "z" else (z, w + deg)
                tgt = out.get(zw)
                if tgt is None:
                    tgt = out[zw] = {}
                for k2, c2 in ik.items():
                    t = sr.pair_mul(c, c2)
                    tgt[k2] = add(tgt[k2], t) if k2 in tgt else t
    prec = _min_prec(*precs)
    if d.var == "z":
        return BiSeries(sr, out, prec, u.wprec, n)
    return BiSeries(sr, out, u.zprec, prec, n)


def apply_chain(derivations, u, zmax=8):
    """Apply derivations right to left, as in the written composite D1 D2 ... Dk u."""
    s = u if isinstance(u, BiSeries) else BiSeries.from_wedge(u)
    for d in reversed(list(derivations)):
        s = apply_derivation(d, s, zmax)
    return s


# generating functions

def generating_x(zmax=8, sr=QPLUS, n=None):
    """x(z) = sum_i x^i z^i, truncated."""
    sr = get_semiring(sr)
    return apply_derivation(SigmaPlus("z"), WedgeElement.basis(sr, (0,), n), zmax)


def _dual_indices(u, B):
    idx = set()
    for key in u.keys():
        idx.update(key)
    if B.kind == "explicit":
        for (i, j) in B.entries:
            idx.update((i, j))
    return sorted(idx)


def generating_partial(u, B=None):
    """∂(w^-1) ⌟ u = sum_j (∂^j ⌟ u) w^{-j}; finite and exact."""
    if isinstance(u, BiSeries):
        return partial_series(u, B)
    B = B or kronecker(u.sr)
    out = {}
    for j in _dual_indices(u, B):
        v = contract(j, u, B)
        if v:
            out[(0, -j)] = dict(v.coeffs)
    return BiSeries(u.sr, out, n=u.n)


def partial_series(s, B=None):
    """∂(w^-1) ⌟ s for a series s: contract every coefficient."""
    B = B or kronecker(s.sr)
    if s.wprec is not None:
        raise ValueError("∂(w^-1) lowers the w-degree; the input must be exact in w")
    total = BiSeries(s.sr, {}, s.zprec, None, s.n)
    for (z, w), inner in s.terms.items():
        u = WedgeElement(s.sr, inner, s.n, _clean=True)
        total = total.add(generating_partial(u, B).shift(z, w))
    return total


class DualSeries:
    """sum_i ∂^{j+i} w^{-i} for i = 0..wmax: the transpose of σ₋(w) applied to ∂^j."""

    def __init__(self, j, wmax):
        self.j = j
        self.wmax = wmax

    def terms(self):
        return [(-i, self.j + i) for i in range(self.wmax + 1)]

    def contract(self, u, B=None):
        B = B or kronecker(u.sr)
        top = max((max(k) for k in u.keys() if k), default=-1)
        if B.kind == "kronecker" and top > self.j + self.wmax:
            raise ValueError("the truncated dual series does not reach every factor of u")
        out = {}
        for wdeg, idx in self.terms():
            v = contract(idx, u, B)
            if v:
                out[(0, wdeg)] = dict(v.coeffs)
        return BiSeries(u.sr, out, n=u.n)


def transpose_sigma_minus(j, wmax=8):
    return DualSeries(j, wmax)


def scalar_series(sr, coeffs, n=None):
    """A scalar (degree 0) series from {(z, w): pair}."""
    return BiSeries(sr, {zw: {(): c} for zw, c in coeffs.items()}, n=n)


def two_row_expand(scalars, vectors):
    """sum_j sign(j) scalars[j] · (wedge of every vector except the j-th).

    The first position counts positive and signs alternate, as for contraction.
    """
    if len(scalars) != len(vectors):
        raise ValueError("two_row_expand needs as many scalars as vectors")
    k = len(vectors)
    if k == 0:
        raise ValueError("two_row_expand needs at least one column")
    sr = vectors[0].sr
    n = vectors[0].n
    one = BiSeries.monomial(sr, n=n)
    prefix = [one]
    for v in vectors:
        prefix.append(series_mul(prefix[-1], v))
    suffix = [one]
    for v in reversed(vectors):
        suffix.append(series_mul(v, suffix[-1]))
    suffix.reverse()
    total = None
    for pos in range(k):
        term = series_mul(scalars[pos], series_mul(prefix[pos], suffix[pos + 1]))
        if pos & 1:
            term = term.negate()
        total = term if total is None else total.add(term)
    return total


# comparison

class Comparison(NamedTuple):
    verdict: str   # "holds", "fails" or "inconclusive"
    witness: tuple = None   # (z, w, key, left pair, right pair)


def compare_series(lhs, rhs, zmax=None, wmax=None, relation="surpassed_by"):
    """Decide lhs <=0 rhs coefficientwise up to (zmax, wmax).

    ``relation="mutual"`` asks for both directions.  Coefficients beyond
    what both series know are never compared; if the requested window
    reaches past them the verdict is "inconclusive" unless a failure was
    already found inside.
    """
    _same(lhs, rhs)
    sr = lhs.sr
    zk = _min_prec(lhs.zprec, rhs.zprec)
    wk = _min_prec(lhs.wprec, rhs.wprec)
    zlim = _bound(zmax, zk)
    wlim = _bound(wmax, wk)
    zero = sr.pair_zero
    for zw in sorted(lhs.terms.keys() | rhs.terms.keys()):
        z, w = zw
        if (zlim is not None and z > zlim) or (wlim is not None and w > wlim):
            continue
        a = lhs.terms.get(zw, {})
        b = rhs.terms.get(zw, {})
        for key in sorted(a.keys() | b.keys(), key=lambda k: (len(k), k)):
            ca, cb = a.get(key, zero), b.get(key, zero)
            ok = sr.pair_surpasses(ca, cb)
            if ok and relation == "mutual":
                ok = sr.pair_surpasses(cb, ca)
            if not ok:
                return Comparison("fails", (z, w, key, ca, cb))
    if _beyond(zmax, zk) or _beyond(wmax, wk):
        return Comparison("inconclusive", None)
    return Comparison("holds", None)


def _beyond(requested, known):
    if known is None:
        return False
    return requested is None or requested > known


# Pieri and the exponential formula

def sigma_coefficient(sr, r, lam, i, n=None):
    """The z^i coefficient of σ₊(z)[x]^r_λ."""
    u = WedgeElement.from_partition(sr, r, lam, n)
    return apply_derivation(SigmaPlus("z"), u, i).coefficient(i, 0)


def _shift_derivation(sr, u, i, coeff):
    """coeff · δ(x^i·)(u): shift one factor at a time by i."""
    out = {}
    for key, c in u.coeffs.items():
        cc = sr.pair_mul(coeff, c)
        for pos in range(len(key)):
            new = key[:pos] + (key[pos] + i,) + key[pos + 1:]
            if u.n is not None and key[pos] + i >= u.n:
                continue
            out[new] = sr.pair_add(out[new], cc) if new in out else cc
    return WedgeElement(sr, out, u.n)


def exp_expansion(u, zmax):
    """exp(sum_{i>=1} (1/i) δ(x^i) z^i) applied to u, through z^zmax.  Over Q>=0 only."""
    sr = u.sr
    if sr is not QPLUS:
        raise ValueError("the exponential needs rational coefficients")
    total = {0: u}
    term = {0: u}
    for k in range(1, zmax + 1):
        nxt = {}
        for deg, v in term.items():
            for i in range(1, zmax - deg + 1):
                coeff = sr.pair(Fraction(1, i * k))
                image = _shift_derivation(sr, v, i, coeff)
                if image:
                    nxt[deg + i] = nxt[deg + i].add(image) if deg + i in nxt else image
        term = nxt
        for deg, v in term.items():
            total[deg] = total[deg].add(v) if deg in total else v
    return BiSeries(sr, {(d, 0): dict(v.coeffs) for d, v in total.items()}, zmax, None, u.n)


def exp_check(zmax=4, max_exponent=4, compare="surpassed"):
    """Compare the exponential formula with σ₊(z) on every basis wedge with exponents <= max_exponent.

    ``compare`` is "surpassed" (exponential side <=0 σ₊ side), "balanced"
    (equal after cancelling balanced parts) or "exact" (equal pairs).
    Returns (ok, first mismatching basis wedge).
    """
    from itertools import combinations
    sr = QPLUS
    for r in range(0, max_exponent + 2):
        for key in combinations(range(max_exponent, -1, -1), r):
            u = WedgeElement.basis(sr, key)
            left = exp_expansion(u, zmax)
            right = apply_derivation(SigmaPlus("z"), u, zmax)
            if compare == "surpassed":
                ok = compare_series(left, right, zmax).verdict == "holds"
            elif compare == "balanced":
                ok = _terms_equal(sr, left.type2_reduce().terms, right.type2_reduce().terms)
            elif compare == "exact":
                ok = _terms_equal(sr, left.terms, right.terms)
            else:
                raise ValueError(f"unknown comparison {compare!r}")
            if not ok:
                return False, key
    return True, None


__all__ = [
    "BiSeries", "Derivation", "SigmaPlus", "SigmaMinus", "SigmaPlusBar", "SigmaMinusBar",
    "HSFromEndo", "HSBarFromEndo", "apply_derivation", "apply_chain", "series_mul",
    "series_add", "series_scale_monomial", "generating_x", "generating_partial",
    "partial_series", "transpose_sigma_minus", "two_row_expand", "compare_series",
    "Comparison", "sigma_coefficient", "exp_expansion", "exp_check", "scalar_series",
    "BilinearForm",
]
