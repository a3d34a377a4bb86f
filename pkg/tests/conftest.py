from fractions import Fraction
import sys

from hypothesis import settings, strategies as st

from flexmeadow.external import ExtNum
from flexmeadow.neutrix import FULL, INFINITESIMALS, LIMITED, ZERO_N, cut
from flexmeadow.valcore import FieldElem, ONE, ZERO, f_inv, f_mul, from_terms

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

exponents = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 3))
coefficients = st.builds(
    Fraction, st.integers(-10, 10).filter(bool), st.integers(1, 10))


@st.composite
def polys(draw, max_terms=3, nonzero=False):
    terms = draw(st.lists(st.tuples(coefficients, exponents), min_size=1, max_size=max_terms))
    x = from_terms(terms)
    if nonzero and x.is_zero():
        x = from_terms(terms[:1])
    return x


@st.composite
def field_elems(draw, nonzero=False):
    x = draw(polys(nonzero=nonzero))
    if draw(st.booleans()):
        x = f_mul(x, f_inv(draw(polys(nonzero=True))))
    return x


neutrices = st.one_of(
    st.just(ZERO_N), st.just(FULL),
    st.builds(cut, exponents, st.booleans()),
)

specials = st.sampled_from([
    ExtNum(ZERO, ZERO_N), ExtNum(ONE, ZERO_N), ExtNum(ZERO, INFINITESIMALS),
    ExtNum(ZERO, LIMITED), ExtNum(ZERO, FULL),
])

extnums = st.one_of(
    specials,
    st.builds(ExtNum, field_elems(), neutrices),
    st.builds(ExtNum, st.just(ZERO), neutrices),
)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    key = lambda k: (int(str(k).rstrip("abc")), str(k))
    for k in sorted(mod.RESULTS, key=key):
        ok, detail = mod.RESULTS[k]
        terminalreporter.write_line(f"criterion {str(k):<3} {'PASS' if ok else 'FAIL'}  {detail}")
