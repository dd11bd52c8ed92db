import random

import pytest

from slicecert.exactmat import IntMatrix

ACCEPTANCE_LINES = []


def random_unimodular(rng, n, steps=None):
    """Product of random elementary row operations and a signed permutation."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    rng.shuffle(rows)
    for r in rows:
        if rng.random() < 0.5:
            r[:] = [-x for x in r]
    return IntMatrix(rows, shape=(n, n))


@pytest.fixture
def rng():
    return random.Random(20031305)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
