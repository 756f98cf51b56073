from fractions import Fraction

import pytest

from qbr.qnumbers import QContext

U_SAMPLES = ("3/5", "2/7", "5/9")

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=U_SAMPLES)
def qc(request):
    return QContext(Fraction(request.param))


@pytest.fixture
def qc35():
    return QContext(Fraction(3, 5))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
