import pytest

from nakayama_gp import validate_kupisch


@pytest.fixture
def a45():
    return validate_kupisch([4, 5])


@pytest.fixture
def a3():
    return validate_kupisch([3])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
