from fractions import Fraction

import pytest
from hypothesis import strategies as st

from semiwedge.semiring import MAXPLUS, NAT, NEG_INF, QPLUS, Pair

SEMIRINGS = [NAT, QPLUS, MAXPLUS]


def scalars(sr, small=False):
    top = 6 if small else 50
    if sr is NAT:
        return st.integers(0, top)
    if sr is QPLUS:
        return st.fractions(min_value=0, max_value=top, max_denominator=6)
    return st.one_of(st.just(NEG_INF), st.integers(-top, top))


def pairs(sr, small=False):
    return st.builds(Pair, scalars(sr, small), scalars(sr, small))


def tangible_scalars(sr):
    return scalars(sr).filter(lambda a: not sr.is_zero(a))


@pytest.fixture(params=SEMIRINGS, ids=lambda s: s.id)
def sr(request):
    return request.param


def frac(text):
    return Fraction(text)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.write_sep("=", "acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
