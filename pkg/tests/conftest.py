from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from cubicchar.exactpoly import Scheme, TruncatedPolynomial

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# a small two-variable scheme with both per-variable and total caps
SMALL = Scheme.make(["h", "e"], caps={"h": 4, "e": 5}, total_cap=6)

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def polys(draw, scheme=SMALL, max_terms=6):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(0, (cap or 6) - 1)) for cap in scheme.caps)
        if scheme.admits(exps):
            terms[exps] = terms.get(exps, 0) + draw(coeffs)
    return TruncatedPolynomial(scheme, terms)


@st.composite
def units(draw, scheme=SMALL):
    p = draw(polys(scheme))
    c = draw(coeffs.filter(lambda x: x != 0))
    return p - p.constant_term() + c


@pytest.fixture(scope="session")
def small_scheme():
    return SMALL


def frac(x) -> Fraction:
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
