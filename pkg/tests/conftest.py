import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from fermatpoly import Polynomial

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_criterion_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _criterion_markers.get(report.nodeid)
    if marker is not None:
        _criterion_results[report.nodeid] = (marker, report.outcome)


_criterion_markers = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criterion_markers[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criterion_results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_criterion_results.values()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title}")


def random_rational(rng: random.Random, bound=10, max_den=50) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def random_polynomial(rng: random.Random, max_degree=8, min_degree=0) -> Polynomial:
    deg = rng.randint(min_degree, max_degree)
    coeffs = [random_rational(rng, 10, 12) for _ in range(deg + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    return Polynomial(coeffs)


@pytest.fixture
def rng():
    return random.Random(20161019)


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=40)
nonzero_rationals = rationals.filter(lambda r: r != 0)


@st.composite
def polynomials(draw, max_degree=8, min_degree=0):
    coeffs = draw(st.lists(rationals, min_size=min_degree + 1, max_size=max_degree + 1))
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    return Polynomial(coeffs)
