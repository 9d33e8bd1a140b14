"""Partitions, exponent tuples and the Pieri rule."""

from functools import lru_cache
from typing import NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zeros are trimmed on construction, so ``Partition((2, 1, 0)) == Partition((2, 1))``.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return format_partition(self)


def format_partition(lam):
    return ",".join(map(str, lam)) if lam else "0"


def parse_partition(text):
    text = text.strip().strip("()")
    if text in ("", "0"):
        return Partition()
    return Partition(int(p) for p in text.replace(" ", "").split(",") if p != "")


def conjugate(lam):
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > k) for k in range(lam[0]))


def exponent_tuple(r, lam):
    """(r-1+lam_1, r-2+lam_2, ..., lam_r), padding lam with zeros."""
    lam = tuple(lam)
    if r < 0:
        raise ValueError("degree must be nonnegative")
    if len(lam) > r:
        raise ValueError(f"partition {lam} has more than {r} parts")
    lam = lam + (0,) * (r - len(lam))
    return tuple(r - 1 - i + lam[i] for i in range(r))


class CanonicalTuple(NamedTuple):
    orientation: int   # +1, -1, or 0 when the tuple had a repeat
    degree: int
    partition: Partition

    @property
    def exponents(self):
        return exponent_tuple(self.degree, self.partition)


@lru_cache(maxsize=None)
def sort_with_sign(t):
    """Sort t descending.  Returns (sign, sorted tuple), sign 0 on a repeat."""
    if len(set(t)) != len(t):
        return 0, None
    inversions = 0
    for a in range(len(t)):
        ta = t[a]
        for b in range(a + 1, len(t)):
            if ta < t[b]:
                inversions += 1
    return (-1 if inversions & 1 else 1), tuple(sorted(t, reverse=True))


def exponents_to_partition(exps):
    """Inverse of exponent_tuple for a strictly decreasing tuple."""
    r = len(exps)
    return Partition(e - (r - 1 - i) for i, e in enumerate(exps))


def canonicalize_tuple(t):
    t = tuple(t)
    sign, srt = sort_with_sign(t)
    if sign == 0:
        return CanonicalTuple(0, len(t), Partition())
    return CanonicalTuple(sign, len(t), exponents_to_partition(srt))


def partitions(weight, max_parts=None, max_part=None):
    """All partitions of the given weight, largest first."""
    if max_parts is None:
        max_parts = weight
    if max_part is None:
        max_part = weight

    def rec(remaining, parts_left, cap):
        if remaining == 0:
            yield ()
            return
        if parts_left == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    return [Partition(p) for p in rec(weight, max_parts, max_part)]


def partitions_up_to(max_weight, max_parts, max_part=None):
    out = []
    for w in range(max_weight + 1):
        out.extend(partitions(w, max_parts, max_part))
    return out


def interlaces(mu, lam, r):
    """mu_1 >= lam_1 >= mu_2 >= lam_2 >= ... >= mu_r >= lam_r."""
    mu = tuple(mu) + (0,) * (r - len(mu))
    lam = tuple(lam) + (0,) * (r - len(lam))
    if len(mu) > r or len(lam) > r:
        return False
    for k in range(r):
        if mu[k] < lam[k]:
            return False
        if k + 1 < r and lam[k] < mu[k + 1]:
            return False
    return True


def pieri(lam, i, r, n=None):
    """Partitions mu with at most r parts interlacing lam and |mu| = |lam| + i.

    With a finite rank bound n only mu fitting in an r x (n - r) box are kept,
    matching the convention that x^k vanishes for k >= n.
    """
    lam = tuple(lam) + (0,) * (r - len(lam))
    if len(lam) > r:
        raise ValueError(f"partition has more than {r} parts")
    out = []

    def rec(k, acc, left):
        if k == r:
            if left == 0:
                out.append(Partition(acc))
            return
        hi = lam[k] + left if k == 0 else min(lam[k - 1], lam[k] + left)
        for m in range(hi, lam[k] - 1, -1):
            rec(k + 1, acc + (m,), left - (m - lam[k]))

    rec(0, (), i)
    if n is not None:
        out = [mu for mu in out if not mu or mu[0] <= n - r]
    return out


def monomial_to_partition(exponents):
    """e_1^{i_1} ... e_r^{i_r} -> conjugate of (1^{i_1} 2^{i_2} ...)."""
    parts = []
    for k, mult in enumerate(exponents, start=1):
        if mult < 0:
            raise ValueError("exponents must be nonnegative")
        parts.extend([k] * mult)
    return conjugate(sorted(parts, reverse=True))
