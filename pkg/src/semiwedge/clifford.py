"""Clifford semialgebras with negation map.

Two concrete models on words in x^1, x^2, ...:

* the standard one, whose words are non-decreasing and where a descent
  x^k x^j (k > j) is rewritten to B(x^k, x^j) (-) x^j x^k;
* the reduced one, whose words are strictly increasing and where in
  addition x^i x^i = q(x^i).

The standard model is exactly associative, the reduced one only up to
quasi-zeros.  Mixed words in x^i and ∂^j are brought to normal form (all
x letters first) and act on the exterior semialgebra.
"""

import random

from .exterior import BilinearForm, WedgeElement, contract, kronecker, wedge
from .negmod import FreeElement
from .partitions import sort_with_sign
from .semiring import Pair, get_semiring


class QuadraticPair:
    """A quadratic form q together with its bilinear companion B, 2 q(v) = B(v, v)."""

    def __init__(self, q, B):
        self.B = B
        self.sr = B.sr
        self.q = {i: (Pair(*v) if isinstance(v, tuple) else self.sr.pair(v)) for i, v in q.items()}
        self._std_cache = {}
        self._red_cache = {}

    @classmethod
    def from_q(cls, sr, q, off_diagonal=None):
        """Build B with B(x^i, x^i) = 2 q(x^i) and the given off-diagonal values."""
        sr = get_semiring(sr)
        entries = {}
        for (i, j), v in (off_diagonal or {}).items():
            if i == j:
                raise ValueError("diagonal values are determined by q")
            entries[(i, j)] = v
        for i, v in q.items():
            entries[(i, i)] = sr.add(v, v)
        return cls(q, BilinearForm(sr, entries, kind="explicit"))

    def q_value(self, i):
        return self.q.get(i, self.sr.pair_zero)

    def is_consistent(self):
        sr = self.sr
        return all(sr.pair_eq(sr.pair_add(v, v), self.B.value(i, i)) for i, v in self.q.items())


class CliffordElement(FreeElement):
    """Sums of oriented words; the key is the letter tuple."""

    __slots__ = ("mode",)

    def __init__(self, sr, coeffs=None, mode="std", _clean=False):
        if mode not in ("std", "reduced"):
            raise ValueError(f"unknown mode {mode!r}")
        if coeffs is not None and not _clean:
            for key in dict(coeffs):
                if mode == "std" and any(a > b for a, b in zip(key, key[1:])):
                    raise ValueError(f"standard words must be non-decreasing: {key}")
                if mode == "reduced" and any(a >= b for a, b in zip(key, key[1:])):
                    raise ValueError(f"reduced words must be strictly increasing: {key}")
        super().__init__(sr, coeffs, _clean=_clean)
        self.mode = mode

    def _new(self, coeffs):
        return CliffordElement(self.sr, coeffs, self.mode, _clean=True)

    @classmethod
    def word(cls, sr, letters, mode="std", coeff=None):
        sr = get_semiring(sr)
        return cls(sr, {tuple(letters): sr.pair_one if coeff is None else coeff}, mode)

    @classmethod
    def letter(cls, sr, i, mode="std"):
        return cls.word(sr, (i,), mode)

    def __repr__(self):
        return f"CliffordElement({self.sr.id}, {self.mode}, {format_words(self, _letters_text)!r})"


def _accumulate(sr, out, key, c):
    if key in out:
        out[key] = sr.pair_add(out[key], c)
    else:
        out[key] = c


def _rmul_std(qp, w, j):
    """w * x^j for a non-decreasing word w, as {word: pair}."""
    cached = qp._std_cache.get((w, j))
    if cached is not None:
        return cached
    sr = qp.sr
    if not w or w[-1] <= j:
        out = {w + (j,): sr.pair_one}
    else:
        k, prefix = w[-1], w[:-1]
        out = {}
        b = qp.B.value(k, j)
        if not sr.is_pair_zero(b):
            out[prefix] = b
        for word, c in _rmul_std(qp, prefix, j).items():
            _accumulate(sr, out, word + (k,), sr.negate(c))
    qp._std_cache[(w, j)] = out
    return out


def _rmul_reduced(qp, w, j):
    """w * x^j for a strictly increasing word w."""
    cached = qp._red_cache.get((w, j))
    if cached is not None:
        return cached
    sr = qp.sr
    if not w or w[-1] < j:
        out = {w + (j,): sr.pair_one}
    elif w[-1] == j:
        q = qp.q_value(j)
        out = {} if sr.is_pair_zero(q) else {w[:-1]: q}
    else:
        k, prefix = w[-1], w[:-1]
        out = {}
        b = qp.B.value(k, j)
        if not sr.is_pair_zero(b):
            out[prefix] = b
        for word, c in _rmul_reduced(qp, prefix, j).items():
            _accumulate(sr, out, word + (k,), sr.negate(c))
    qp._red_cache[(w, j)] = out
    return out


def _mul(u, v, qp, rmul, mode):
    sr = u.sr
    if u.sr is not v.sr or qp.sr is not u.sr:
        raise ValueError("semiring mismatch")
    out = {}
    for wv, cv in v.coeffs.items():
        for wu, cu in u.coeffs.items():
            current = {wu: sr.pair_mul(cu, cv)}
            for j in wv:
                nxt = {}
                for word, c in current.items():
                    for word2, c2 in rmul(qp, word, j).items():
                        _accumulate(sr, nxt, word2, sr.pair_mul(c, c2))
                current = nxt
            for word, c in current.items():
                _accumulate(sr, out, word, c)
    return CliffordElement(sr, {k: c for k, c in out.items() if not sr.is_pair_zero(c)},
                           mode, _clean=True)


def mul_std(u, v, qp):
    if u.mode != "std" or v.mode != "std":
        raise ValueError("mul_std needs standard words")
    return _mul(u, v, qp, _rmul_std, "std")


def mul_reduced(u, v, qp):
    if u.mode != "reduced" or v.mode != "reduced":
        raise ValueError("mul_reduced needs reduced words")
    return _mul(u, v, qp, _rmul_reduced, "reduced")


def involution(w, qp):
    """(v_1 ... v_k)^σ = (-)^k v_k ... v_1, re-canonicalized in the standard model."""
    if w.mode != "std":
        raise ValueError("the involution is defined on the standard model")
    sr = w.sr
    out = CliffordElement(sr, {}, "std")
    for letters, c in w.coeffs.items():
        rev = CliffordElement(sr, {(): c}, "std")
        for j in reversed(letters):
            rev = mul_std(rev, CliffordElement.letter(sr, j), qp)
        if len(letters) & 1:
            rev = rev.negate()
        out = out.add(rev)
    return out


def differs_by_balance(u, v):
    """Whether u (-) v is a quasi-zero, i.e. u and v agree up to balanced terms."""
    return u.minus(v).is_quasi_zero()


# mixed words in x^i and ∂^j

X, D = "x", "d"


class MixedElement(FreeElement):
    """Sums of words in the letters ("x", i) and ("d", j)."""

    __slots__ = ()

    def _new(self, coeffs):
        return MixedElement(self.sr, coeffs, _clean=True)

    @classmethod
    def word(cls, sr, letters, coeff=None):
        sr = get_semiring(sr)
        return cls(sr, {tuple(letters): sr.pair_one if coeff is None else coeff})

    def __repr__(self):
        return f"MixedElement({self.sr.id}, {format_words(self, _mixed_text)!r})"

    def product(self, other):
        """Concatenation product, no rewriting."""
        sr = self.sr
        out = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                _accumulate(sr, out, a + b, sr.pair_mul(ca, cb))
        return MixedElement(sr, out)

    __mul__ = product


def is_normal(word):
    """All x letters before all ∂ letters, each block strictly decreasing."""
    xs = [i for kind, i in word if kind == X]
    ds = [j for kind, j in word if kind == D]
    split = len(xs)
    if any(kind != X for kind, _ in word[:split]):
        return False
    return (all(a > b for a, b in zip(xs, xs[1:]))
            and all(a > b for a, b in zip(ds, ds[1:])))


def _inversion_positions(word):
    return [p for p in range(len(word) - 1) if word[p][0] == D and word[p + 1][0] == X]


def _sort_blocks(word):
    """Sort the x block and the ∂ block of a separated word; (sign, word) or (0, None)."""
    xs = tuple(i for kind, i in word if kind == X)
    ds = tuple(j for kind, j in word if kind == D)
    sx, xs_sorted = sort_with_sign(xs)
    if sx == 0:
        return 0, None
    sd, ds_sorted = sort_with_sign(ds)
    if sd == 0:
        return 0, None
    return sx * sd, tuple((X, i) for i in xs_sorted) + tuple((D, j) for j in ds_sorted)


def normal_form(e, B=None, strategy="leftmost", seed=0):
    """Rewrite ∂^j x^i -> B(x^i, x^j) (-) x^i ∂^j until every x precedes every ∂.

    ``strategy`` picks which ∂x adjacency is rewritten first: "leftmost",
    "rightmost" or "random" (seeded).  The x and ∂ blocks are then sorted
    descending, the permutation sign going into the coefficient, and words
    with a repeated letter in a block are dropped.
    """
    sr = e.sr
    B = B or kronecker(sr)
    rng = random.Random(seed)
    pending = dict(e.coeffs)
    done = {}
    while pending:
        word, c = pending.popitem()
        spots = _inversion_positions(word)
        if not spots:
            sign, canon = _sort_blocks(word)
            if sign:
                _accumulate(sr, done, canon, sr.signed(c, sign))
            continue
        if strategy == "leftmost":
            p = spots[0]
        elif strategy == "rightmost":
            p = spots[-1]
        elif strategy == "random":
            p = rng.choice(spots)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        j, i = word[p][1], word[p + 1][1]
        left, right = word[:p], word[p + 2:]
        val = B.value(i, j)
        if not sr.is_pair_zero(val):
            _accumulate(sr, pending, left + right, sr.pair_mul(val, c))
        _accumulate(sr, pending, left + ((X, i), (D, j)) + right, sr.negate(c))
    return MixedElement(sr, {k: v for k, v in done.items() if not sr.is_pair_zero(v)}, _clean=True)


def clifford_act(w, u, B=None):
    """Let a sum of mixed words act on a wedge: x letters wedge on the left, ∂ letters contract.

    Letters act right to left, so in a normal word the ∂ block is applied
    innermost-first and the x block is wedged on afterwards.
    """
    sr = u.sr
    B = B or kronecker(sr)
    out = u.zero()
    for word, c in w.coeffs.items():
        v = u
        for kind, idx in reversed(word):
            if kind == X:
                v = wedge(WedgeElement.basis(sr, (idx,), u.n), v)
            else:
                v = contract(idx, v, B)
            if not v:
                break
        out = out.add(v.scale(c))
    return out


def inner_product(a, b, B):
    """<u1 ⊕ v1*, u2 ⊕ v2*> = B(u1, v2) + B(u2, v1).

    Each argument is a pair (u, v) of dicts {index: pair}: u is the part
    in V, v the part in the dual.
    """
    (u1, v1), (u2, v2) = a, b
    sr = B.sr
    total = sr.pair_zero
    for left, right in ((u1, v2), (u2, v1)):
        for i, ci in left.items():
            for j, cj in right.items():
                total = sr.pair_add(total, sr.pair_mul(sr.pair_mul(ci, cj), B.value(i, j)))
    return total


def hyperbolic_gram(n, B):
    """Gram matrix of x^0..x^{n-1}, (x^0)*..(x^{n-1})* under inner_product."""
    sr = B.sr
    base = [({i: sr.pair_one}, {}) for i in range(n)] + [({}, {j: sr.pair_one}) for j in range(n)]
    return [[inner_product(a, b, B) for b in base] for a in base]


# text forms

def _letters_text(word):
    return "*".join(f"x{i}" for i in word) if word else "1"


def _mixed_text(word):
    return "*".join(f"{kind}{i}" for kind, i in word) if word else "1"


def format_words(e, render=None):
    """Render a sum of words: "1 + neg(x1*d1) + [2,1]x2"."""
    if render is None:
        render = _mixed_text if isinstance(e, MixedElement) else _letters_text
    sr = e.sr
    if not e:
        return "0"
    parts = []
    for word, c in sorted(e.coeffs.items(), key=lambda kc: (len(kc[0]), kc[0])):
        text = render(word)
        if sr.pair_eq(c, sr.pair_one):
            parts.append(text)
        elif sr.pair_eq(c, sr.pair_minus_one):
            parts.append(f"neg({text})")
        else:
            parts.append(sr.format_pair(c) + ("" if text == "1" else text))
    return " + ".join(parts)
