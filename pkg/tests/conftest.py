import pytest

from stepseq.search import Filter, collect


def simulate_with_sets(m, moves):
    """Reference simulator on Python sets, independent of the bitmask code.

    Returns True iff ``moves`` visits every non-initial subset of
    {0, ..., m-1} exactly once.
    """
    q = list(range(m))
    chain = [frozenset(q[:i]) for i in range(m + 1)]
    seen = set(chain)
    for i in moves:
        if not 1 <= i < m:
            return False
        q[i - 1], q[i] = q[i], q[i - 1]
        new = frozenset(q[:i])
        if new in seen:
            return False
        seen.add(new)
    return len(seen) == 2 ** m


@pytest.fixture(scope="session")
def all_m3():
    return collect(3)


@pytest.fixture(scope="session")
def all_m4():
    return collect(4)


@pytest.fixture(scope="session")
def all_m5():
    return collect(5)


@pytest.fixture(scope="session")
def contiguous_m6():
    return collect(6, Filter.CONTIGUOUS)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
