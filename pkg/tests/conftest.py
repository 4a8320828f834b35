import pytest

from arithbertini.bertini import LinearSeries
from arithbertini.exactalg import MultiPoly
from arithbertini.variety import VarietyPresentation


@pytest.fixture(scope="session")
def P1():
    return VarietyPresentation.projective_space(1)


@pytest.fixture(scope="session")
def P2():
    return VarietyPresentation.projective_space(2)


@pytest.fixture(scope="session")
def conic():
    x0, x1, x2 = MultiPoly.variables_of(("X0", "X1", "X2"))
    return VarietyPresentation(("X0", "X1", "X2"), (x0 * x2 - x1 * x1,), 1, 2)


@pytest.fixture(scope="session")
def cubic():
    x0, x1, x2 = MultiPoly.variables_of(("X0", "X1", "X2"))
    return VarietyPresentation(("X0", "X1", "X2"), (x0 ** 3 + x1 ** 3 + x2 ** 3,), 1, 3)


@pytest.fixture(scope="session")
def series_P1(P1):
    return LinearSeries(P1, tuple(MultiPoly.variables_of(P1.variables)))


@pytest.fixture(scope="session")
def series_conic(conic):
    return LinearSeries(conic, tuple(MultiPoly.variables_of(conic.variables)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
