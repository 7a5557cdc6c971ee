import pytest

from balanced_patterns.transactions import TransactionDatabase, from_letters

A, B, C, D, E, F = 1, 2, 3, 4, 5, 6

EXAMPLE1 = ["ABC", "DC", "ABE", "EF", "ABF", "EF", "ABF", "EF", "ABC"]
# two {E,F} after transaction 1 and two before transaction 9
EXAMPLE1_MODIFIED = EXAMPLE1[:1] + ["EF", "EF"] + EXAMPLE1[1:8] + ["EF", "EF"] + EXAMPLE1[8:]


@pytest.fixture
def ex1():
    return from_letters(EXAMPLE1)


@pytest.fixture
def ex1_modified():
    return from_letters(EXAMPLE1_MODIFIED)


@pytest.fixture
def ex2():
    """A at positions 0,3,6,9 and B at 3,6,9,12."""
    rows = [[] for _ in range(13)]
    for p in (0, 3, 6, 9):
        rows[p].append(A)
    for p in (3, 6, 9, 12):
        rows[p].append(B)
    return TransactionDatabase(rows)


_acceptance_lines = []


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for an acceptance criterion.

    Usage: ``with criterion("4 31-pattern experiment"): ...``
    """
    from contextlib import contextmanager

    @contextmanager
    def _ctx(name):
        try:
            yield
        except BaseException as e:
            line = f"FAIL  {name}: {type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}"
            print(line)
            _acceptance_lines.append(line)
            raise
        line = f"PASS  {name}"
        print(line)
        _acceptance_lines.append(line)

    return _ctx


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
