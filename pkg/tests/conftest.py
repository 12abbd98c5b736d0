from functools import lru_cache

import pytest

from crossedcube.topology import build_cq, build_hypercube

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def cq(n):
    return build_cq(n)


@lru_cache(maxsize=None)
def qn(n):
    return build_hypercube(n)


@pytest.fixture
def cq7():
    return cq(7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
