"""Commutative base semirings and their symmetrization.

Every coefficient in the package is a pair ``(pos, neg)`` over a base
semiring.  Pairs add componentwise, multiply by the twist product and are
negated by swapping the two components.  The surpassing relation
``p <=0 q`` holds when ``q = p + (c, c)`` for a single ``c``.
"""

import operator
from fractions import Fraction
from typing import Any, NamedTuple


class Pair(NamedTuple):
    pos: Any
    neg: Any

    def __repr__(self):
        return f"({self.pos}, {self.neg})"


class _NegInf:
    """The additive zero of max-plus.  A singleton that sorts below every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf")

    def __reduce__(self):
        return (_NegInf, ())


NEG_INF = _NegInf()


class SemiringDescriptor:
    """A commutative semiring plus an oracle deciding ``b + c = b'``.

    ``solve_add(b, b2)`` returns some ``c`` with ``add(b, c) == b2`` or
    ``None`` when no such ``c`` exists.  For idempotent addition the
    returned witness is the largest one.
    """

    def __init__(self, id, add, mul, zero, one, eq, solve_add,
                 is_idempotent_add=False, parse=None, format=None,
                 cancellative=False):
        self.id = id
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.eq = eq
        self.solve_add = solve_add
        self.is_idempotent_add = is_idempotent_add
        self.cancellative = cancellative
        self._parse = parse
        self._format = format
        self.pair_zero = Pair(zero, zero)
        self.pair_one = Pair(one, zero)
        self.pair_minus_one = Pair(zero, one)

    def __repr__(self):
        return f"<semiring {self.id}>"

    # scalar helpers

    def from_int(self, k):
        """Image of the natural number k under the unique map from N."""
        if k < 0:
            raise ValueError("natural numbers only")
        out = self.zero
        if self.is_idempotent_add:
            return self.one if k else self.zero
        for _ in range(k):
            out = self.add(out, self.one)
        return out

    def parse_scalar(self, text):
        return self._parse(text.strip())

    def format_scalar(self, a):
        return self._format(a)

    def is_zero(self, a):
        return self.eq(a, self.zero)

    # pair arithmetic

    def pair(self, pos, neg=None):
        return Pair(pos, self.zero if neg is None else neg)

    def pair_add(self, p, q):
        add = self.add
        return Pair(add(p[0], q[0]), add(p[1], q[1]))

    def pair_mul(self, p, q):
        add, mul = self.add, self.mul
        return Pair(add(mul(p[0], q[0]), mul(p[1], q[1])),
                    add(mul(p[0], q[1]), mul(p[1], q[0])))

    @staticmethod
    def negate(p):
        return Pair(p[1], p[0])

    def signed(self, p, sign):
        """p for sign +1, the switch of p for sign -1."""
        return p if sign > 0 else Pair(p[1], p[0])

    def is_pair_zero(self, p):
        return self.eq(p[0], self.zero) and self.eq(p[1], self.zero)

    def is_quasi_zero(self, p):
        return self.eq(p[0], p[1])

    def is_tangible(self, p):
        zp, zn = self.is_zero(p[0]), self.is_zero(p[1])
        return zp != zn

    def circ(self, a):
        """The quasi-zero a(-)a of a scalar, as a pair."""
        return Pair(a, a)

    def pair_eq(self, p, q):
        return self.eq(p[0], q[0]) and self.eq(p[1], q[1])

    def pair_surpasses(self, p, q):
        """Decide p <=0 q, i.e. whether q = p + (c, c) for one c."""
        c1 = self.solve_add(p[0], q[0])
        if c1 is None:
            return False
        c2 = self.solve_add(p[1], q[1])
        if c2 is None:
            return False
        for c in (c1, c2):
            if (self.eq(self.add(p[0], c), q[0])
                    and self.eq(self.add(p[1], c), q[1])):
                return True
        return False

    def pair_witness(self, p, q):
        """The c with q = p + (c, c), or None."""
        for c in (self.solve_add(p[0], q[0]), self.solve_add(p[1], q[1])):
            if c is None:
                return None
            if (self.eq(self.add(p[0], c), q[0])
                    and self.eq(self.add(p[1], c), q[1])):
                return c
        return None

    def reduce_pair(self, p):
        """Cancel the balanced part of p.  Only defined for cancellative semirings."""
        if not self.cancellative:
            raise ValueError(f"balanced parts cannot be cancelled over {self.id}")
        a, b = p
        if a >= b:
            return Pair(a - b, self.zero)
        return Pair(self.zero, b - a)

    def format_pair(self, p):
        return f"[{self.format_scalar(p[0])},{self.format_scalar(p[1])}]"


def _nat_solve(b, b2):
    return b2 - b if b2 >= b else None


def _nat_parse(text):
    value = int(text)
    if value < 0:
        raise ValueError(f"not a natural number: {text}")
    return value


def _q_parse(text):
    value = Fraction(text)
    if value < 0:
        raise ValueError(f"not a nonnegative rational: {text}")
    return value


_Q0, _Q1 = Fraction(0), Fraction(1)


# Fraction arithmetic is slow and most entries are the shared 0 and 1, so
# short-circuit on identity before doing real work.

def _q_add(a, b):
    if a is _Q0:
        return b
    if b is _Q0:
        return a
    return a + b


def _q_mul(a, b):
    if a is _Q0 or b is _Q0:
        return _Q0
    if a is _Q1:
        return b
    if b is _Q1:
        return a
    return a * b


def _q_eq(a, b):
    return a is b or a == b


def _max_add(a, b):
    if a is NEG_INF:
        return b
    if b is NEG_INF:
        return a
    return a if a >= b else b


def _max_mul(a, b):
    if a is NEG_INF or b is NEG_INF:
        return NEG_INF
    return a + b


def _max_eq(a, b):
    if a is NEG_INF or b is NEG_INF:
        return a is b
    return a == b


def _max_solve(b, b2):
    # max(b, c) = b2 has the solutions c = b2 when b < b2 and every c <= b2
    # when b == b2; either way b2 itself is the largest witness
    if b2 is NEG_INF:
        return NEG_INF if b is NEG_INF else None
    if b is NEG_INF or b <= b2:
        return b2
    return None


def _max_parse(text):
    if text in ("-inf", "-∞"):
        return NEG_INF
    return int(text)


NAT = SemiringDescriptor(
    "nat", operator.add, operator.mul, 0, 1, operator.eq, _nat_solve,
    parse=_nat_parse, format=str, cancellative=True)

QPLUS = SemiringDescriptor(
    "qplus", _q_add, _q_mul, _Q0, _Q1, _q_eq, _nat_solve, parse=_q_parse, format=str, cancellative=True)

MAXPLUS = SemiringDescriptor(
    "maxplus", _max_add, _max_mul, NEG_INF, 0, _max_eq, _max_solve,
    is_idempotent_add=True, parse=_max_parse, format=str)

_REGISTRY = {s.id: s for s in (NAT, QPLUS, MAXPLUS)}


def builtin_semirings():
    return [NAT, QPLUS, MAXPLUS]


def get_semiring(id_or_descriptor):
    if isinstance(id_or_descriptor, SemiringDescriptor):
        return id_or_descriptor
    try:
        return _REGISTRY[id_or_descriptor]
    except KeyError:
        known = ", ".join(sorted(_REGISTRY))
        raise ValueError(f"unknown semiring {id_or_descriptor!r} (known: {known})") from None


def register_semiring(descriptor):
    """Make a user-defined semiring available by its id."""
    _REGISTRY[descriptor.id] = descriptor
    return descriptor
