from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hpoisson.polyring import Poly, VarSpace

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


rationals = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4)
)


@st.composite
def polys(draw, vs, max_terms=4, max_exp=2, laurent=True):
    """Random Poly over ``vs`` with small exponents; parameters may get negative powers."""
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        coords = tuple(draw(st.integers(0, max_exp)) for _ in range(vs.n))
        lo = -1 if laurent else 0
        pexps = [draw(st.integers(lo, max_exp)) for _ in vs.params]
        params = tuple((i, e) for i, e in enumerate(pexps) if e)
        terms[(coords, params)] = draw(rationals)
    return Poly(vs, terms)


def to_sympy(f: Poly):
    """Independent route: rebuild f as a sympy expression."""
    xs = sp.symbols(f"x0:{f.vs.n}") if f.vs.n else ()
    ps = sp.symbols(f.vs.params) if f.vs.params else ()
    if len(f.vs.params) == 1:
        ps = (ps,)
    expr = sp.Integer(0)
    for (coords, params), c in f.terms.items():
        t = sp.Rational(c.numerator, c.denominator)
        for x, e in zip(xs, coords):
            t *= x**e
        for i, e in params:
            t *= ps[i] ** e
        expr += t
    return sp.expand(expr)


# -- acceptance reporting ----------------------------------------------------

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    import time

    class Rec:
        def __init__(self):
            self.label = request.node.name
            self.start = time.perf_counter()

        def elapsed(self):
            return time.perf_counter() - self.start

    rec = Rec()
    yield rec
    failed = getattr(request.node, "rep_call", None)
    status = "FAIL" if failed is None or failed.failed else "PASS"
    ACCEPTANCE_LINES.append(f"{status}  {rec.label}  ({rec.elapsed():.2f} s)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

