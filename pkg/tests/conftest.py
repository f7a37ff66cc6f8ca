from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qmorris.arith import ONE, ZERO, Q, RatFunc, T

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def qt_polys(draw, max_dq=3, max_dt=2, max_terms=4):
    terms = draw(st.lists(st.tuples(st.integers(0, max_dq), st.integers(0, max_dt), st.integers(-3, 3)),
                          max_size=max_terms))
    out = ZERO
    for dq, dt, c in terms:
        out = out + Q ** dq * T ** dt * c
    return out


@st.composite
def ratfuncs(draw, nonzero=False):
    num = draw(qt_polys())
    if nonzero and not num:
        num = ONE
    den = draw(qt_polys().filter(bool))
    return num / den


def small_fractions(exclude=(0, 1, -1)):
    return st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda x: x not in exclude)


__all__ = ["Fraction", "RatFunc", "qt_polys", "ratfuncs", "small_fractions"]


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
