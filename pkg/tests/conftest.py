import pytest
from hypothesis import settings, strategies as st

from skewdna import SkewPoly, build_field
from skewdna.gf import ZERO

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def F1():
    return build_field(1)


@pytest.fixture(scope="session")
def F2():
    return build_field(2)


@pytest.fixture(scope="session")
def P(F1):
    return lambda text: SkewPoly.parse(F1, text)


def elements(F):
    return st.sampled_from(F.elements())


def polys(F, max_degree=5, nonzero=False):
    coeffs = st.lists(elements(F), min_size=1 if nonzero else 0, max_size=max_degree + 1)
    strategy = coeffs.map(lambda c: SkewPoly(F, c))
    return strategy.filter(lambda p: not p.is_zero()) if nonzero else strategy


F1_STATIC = build_field(1)
F2_STATIC = build_field(2)


# one line per acceptance criterion in the terminal summary
_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _ACCEPTANCE.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


__all__ = ["ZERO", "elements", "polys", "F1_STATIC", "F2_STATIC"]
