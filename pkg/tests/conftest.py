import pytest

from stabletensor import oracle
from stabletensor.partitions import Partition

ACCEPTANCE_LINES = []


def partitions_of(n, max_part=None, max_length=None):
    """All partitions of n, largest parts first."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield Partition()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_length is None else max_length - 1
        for rest in partitions_of(n - first, first, rest_len):
            yield Partition((first,) + tuple(rest))


def partitions_upto(size, max_length=None):
    return [p for n in range(size + 1) for p in partitions_of(n, max_length=max_length)]


@pytest.fixture(autouse=True)
def _dimension_checks_on():
    assert oracle.CHECK_DIMENSIONS
    yield


@pytest.fixture
def acceptance_line():
    def record(line):
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
