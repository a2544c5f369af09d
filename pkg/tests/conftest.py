from itertools import combinations_with_replacement, permutations

import pytest

from kneser_dist.perm_core import Permutation

ACCEPTANCE_LINES: list[str] = []


def all_perms(n):
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


def brute_partitions(n):
    """Partitions of n as ascending tuples, by filtering multisets of parts."""
    out = set()
    for k in range(1, n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), k):
            if sum(combo) == n:
                out.add(combo)
    return sorted(out)


def brute_cycle_lengths(sigma):
    """Cycle lengths by following each point, written independently of Permutation.cycles."""
    n = len(sigma.images)
    seen = set()
    lengths = []
    for x in range(1, n + 1):
        if x in seen:
            continue
        y, k = x, 0
        while True:
            seen.add(y)
            y = sigma.images[y - 1]
            k += 1
            if y == x:
                break
        lengths.append(k)
    return tuple(sorted(lengths))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES
