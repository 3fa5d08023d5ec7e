import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import settings, strategies as st

from wronskian_combinants.binform import BinaryForm

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")

x1, x2, y1, y2 = sp.symbols("x1 x2 y1 y2")


def to_sympy(f: BinaryForm):
    d = f.order
    return sum(sp.Rational(c.numerator, c.denominator) * x1 ** (d - j) * x2 ** j
               for j, c in enumerate(f.coeffs))


def from_sympy(expr, d) -> BinaryForm:
    poly = sp.Poly(sp.expand(expr), x1, x2)
    cs = []
    for j in range(d + 1):
        c = sp.Rational(poly.coeff_monomial(x1 ** (d - j) * x2 ** j))
        cs.append(Fraction(int(c.p), int(c.q)))
    assert sp.expand(to_sympy(BinaryForm(cs, d)) - expr) == 0, "expression has other degrees"
    return BinaryForm(cs, d)


def forms(min_order=0, max_order=6, lo=-5, hi=5):
    return st.integers(min_order, max_order).flatmap(
        lambda d: st.lists(st.integers(lo, hi), min_size=d + 1, max_size=d + 1)
        .map(lambda cs: BinaryForm(cs, d)))


def forms_of_order(d, lo=-5, hi=5):
    return st.lists(st.integers(lo, hi), min_size=d + 1, max_size=d + 1).map(
        lambda cs: BinaryForm(cs, d))


@pytest.fixture
def rng():
    return random.Random(20240611)


# one summary line per acceptance criterion ---------------------------------

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and text")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (rep.when == "call" or (rep.when == "setup" and rep.failed)):
        text = marker.args[1]
        if hasattr(item, "callspec"):
            text += f" [{item.callspec.id}]"
        _criteria.append((marker.args[0], text, rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n, text, outcome, secs in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {n}: {text} ({secs:.1f}s)")
