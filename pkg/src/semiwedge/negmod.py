"""Sparse free modules over pair coefficients, and finite endomorphism matrices."""

import json

from .semiring import Pair, get_semiring


class FreeElement:
    """A finitely supported map from basis keys to pair coefficients.

    Zero pairs are never stored, so two elements are equal exactly when their
    maps are equal.  Instances are treated as immutable.
    """

    __slots__ = ("sr", "coeffs", "_hash")

    def __init__(self, sr, coeffs=None, _clean=False):
        self.sr = get_semiring(sr)
        if coeffs is None:
            coeffs = {}
        elif not _clean:
            is_zero = self.sr.is_pair_zero
            coeffs = {k: Pair(*c) for k, c in dict(coeffs).items() if not is_zero(c)}
        self.coeffs = coeffs
        self._hash = None

    def _new(self, coeffs):
        """Build an element of the same class and shape from a clean map."""
        return type(self)(self.sr, coeffs, _clean=True)

    @classmethod
    def monomial(cls, sr, key, coeff=None):
        sr = get_semiring(sr)
        c = sr.pair_one if coeff is None else Pair(*coeff)
        return cls(sr, {key: c})

    def zero(self):
        return self._new({})

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs.items())

    def items(self):
        return self.coeffs.items()

    def keys(self):
        return self.coeffs.keys()

    def __getitem__(self, key):
        return self.coeffs.get(key, self.sr.pair_zero)

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        if self.sr is not other.sr or self.coeffs.keys() != other.coeffs.keys():
            return False
        eq = self.sr.pair_eq
        return all(eq(c, other.coeffs[k]) for k, c in self.coeffs.items())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {c!r}" for k, c in sorted(self.coeffs.items(), key=_sort_key))
        return f"{type(self).__name__}({self.sr.id}, {{{inner}}})"

    def _check(self, other):
        if self.sr is not other.sr:
            raise ValueError(f"semiring mismatch: {self.sr.id} vs {other.sr.id}")

    def add(self, other):
        self._check(other)
        sr = self.sr
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            if k in out:
                s = sr.pair_add(out[k], c)
                if sr.is_pair_zero(s):
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = c
        return self._new(out)

    __add__ = add

    def negate(self):
        return self._new({k: Pair(c[1], c[0]) for k, c in self.coeffs.items()})

    def minus(self, other):
        """self (-) other, i.e. self plus the negation of other."""
        return self.add(other.negate())

    def scale(self, a):
        sr = self.sr
        a = Pair(*a)
        out = {}
        for k, c in self.coeffs.items():
            p = sr.pair_mul(a, c)
            if not sr.is_pair_zero(p):
                out[k] = p
        return self._new(out)

    def is_quasi_zero(self):
        return all(self.sr.is_quasi_zero(c) for c in self.coeffs.values())

    def surpassed_by(self, other):
        """self <=0 other, decided keywise."""
        self._check(other)
        sr = self.sr
        zero = sr.pair_zero
        for k in self.coeffs.keys() | other.coeffs.keys():
            if not sr.pair_surpasses(self.coeffs.get(k, zero), other.coeffs.get(k, zero)):
                return False
        return True

    def first_violation(self, other):
        """A key where self <=0 other fails, or None."""
        sr = self.sr
        zero = sr.pair_zero
        for k in sorted(self.coeffs.keys() | other.coeffs.keys(), key=repr):
            if not sr.pair_surpasses(self.coeffs.get(k, zero), other.coeffs.get(k, zero)):
                return k
        return None

    def to_json(self, key_to_str=str):
        fmt = self.sr.format_scalar
        return {key_to_str(k): [fmt(c[0]), fmt(c[1])]
                for k, c in sorted(self.coeffs.items(), key=_sort_key)}

    @classmethod
    def from_json(cls, sr, data, str_to_key=lambda s: s):
        sr = get_semiring(sr)
        parse = sr.parse_scalar
        return cls(sr, {str_to_key(k): Pair(parse(str(v[0])), parse(str(v[1])))
                        for k, v in data.items()})

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _sort_key(item):
    return repr(item[0])


def fe_add(u, v):
    return u.add(v)


def fe_negate(u):
    return u.negate()


def fe_scale(a, u):
    return u.scale(a)


def fe_surpasses(u, v):
    """u <=0 v."""
    return u.surpassed_by(v)


class EndoMatrix:
    """A square matrix of pair coefficients acting on a truncated basis."""

    __slots__ = ("sr", "dim", "rows", "_hash")

    def __init__(self, sr, rows):
        self.sr = get_semiring(sr)
        self.rows = tuple(tuple(Pair(*c) for c in row) for row in rows)
        self._hash = None
        self.dim = len(self.rows)
        if any(len(row) != self.dim for row in self.rows):
            raise ValueError("matrix must be square")
        if self.dim == 0:
            raise ValueError("matrix dimension must be positive")

    @classmethod
    def zeros(cls, sr, dim):
        sr = get_semiring(sr)
        return cls(sr, [[sr.pair_zero] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, sr, dim):
        sr = get_semiring(sr)
        return cls(sr, [[sr.pair_one if i == j else sr.pair_zero for j in range(dim)]
                        for i in range(dim)])

    @classmethod
    def elementary(cls, sr, dim, i, j, coeff=None):
        """The matrix with a single entry at row i, column j."""
        sr = get_semiring(sr)
        c = sr.pair_one if coeff is None else coeff
        return cls(sr, [[c if (a, b) == (i, j) else sr.pair_zero for b in range(dim)]
                        for a in range(dim)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        if self.sr is not other.sr or self.dim != other.dim:
            return False
        eq = self.sr.pair_eq
        return all(eq(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        # derivation caches hash this on every lookup
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"EndoMatrix({self.sr.id}, {list(map(list, self.rows))})"

    def _check(self, other):
        if self.sr is not other.sr:
            raise ValueError("semiring mismatch")
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def surpassed_by(self, other):
        self._check(other)
        ok = self.sr.pair_surpasses
        return all(ok(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def is_quasi_zero(self):
        return all(self.sr.is_quasi_zero(c) for row in self.rows for c in row)

    def apply_to_basis(self, j):
        """Column j, as a dict row index -> nonzero pair."""
        sr = self.sr
        return {i: self.rows[i][j] for i in range(self.dim) if not sr.is_pair_zero(self.rows[i][j])}


def mat_add(a, b):
    a._check(b)
    sr = a.sr
    return EndoMatrix(sr, [[sr.pair_add(x, y) for x, y in zip(ra, rb)]
                           for ra, rb in zip(a.rows, b.rows)])


def mat_negate(a):
    return EndoMatrix(a.sr, [[Pair(c[1], c[0]) for c in row] for row in a.rows])


def mat_mul(a, b):
    a._check(b)
    sr = a.sr
    n = a.dim
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = sr.pair_zero
            for k in range(n):
                acc = sr.pair_add(acc, sr.pair_mul(a.rows[i][k], b.rows[k][j]))
            row.append(acc)
        out.append(row)
    return EndoMatrix(sr, out)


def lie_bracket(a, b):
    """[A, B] = AB (-) BA."""
    return mat_add(mat_mul(a, b), mat_negate(mat_mul(b, a)))


def check_jacobi(a, b, c, reverse=False):
    """Whether [[A,B],C] + [B,[A,C]] <=0 [A,[B,C]] entrywise.

    Expanding, the left side is the right side plus (BAC)° + (CAB)°, so in
    general only the opposite surpassing holds; ``reverse=True`` tests that.
    """
    left = mat_add(lie_bracket(lie_bracket(a, b), c), lie_bracket(b, lie_bracket(a, c)))
    right = lie_bracket(a, lie_bracket(b, c))
    if reverse:
        return right.surpassed_by(left)
    return left.surpassed_by(right)
