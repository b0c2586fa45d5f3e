import itertools
import random

import pytest


def brute_force_fixed_points(c):
    """Reference oracle: every +/- string s with sign(W s) == s, by plain loops."""
    n = len(c)
    found = []
    for spins in itertools.product((1, -1), repeat=n):
        ok = True
        for i in range(n):
            f = sum(c[(j - i) % n] * spins[j] for j in range(n))
            if (1 if f >= 0 else -1) != spins[i]:
                ok = False
                break
        if ok:
            found.append("".join("+" if v > 0 else "-" for v in spins))
    return sorted(found)  # "+" < "-" in ASCII, which is packed-index order


def random_row(rng, n, lo=-9, hi=9):
    return [0] + [rng.randint(lo, hi) for _ in range(n - 1)]


@pytest.fixture
def rng():
    return random.Random(20240611)


# One verdict line per acceptance criterion, collected by tests/test_acceptance.py
# and repeated at the end of the run so they show up without ``-s``.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
