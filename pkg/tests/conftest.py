import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fintop.generators import discrete, indiscrete, sierpinski  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def S():
    return sierpinski()


@pytest.fixture
def D2():
    return discrete(2)


@pytest.fixture
def D3():
    return discrete(3)


@pytest.fixture
def I2():
    return indiscrete(2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
