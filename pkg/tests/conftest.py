import functools

import pytest

from peo.exact import count_prime
from peo.solver import root_series

# Lines reported by test_acceptance.py, echoed once at the end of the run.
ACCEPTANCE_LINES = []


@functools.lru_cache(maxsize=None)
def cached_series(family, k, N):
    return tuple(root_series(family, k, N))


@functools.lru_cache(maxsize=None)
def cached_o(N):
    return tuple(count_prime(N))


@pytest.fixture
def series():
    return cached_series


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
