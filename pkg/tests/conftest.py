import random

import pytest

from kncactus.core_tableaux import enumerate_kn, partitions_upto, Tableau
from kncactus.crystal import e, f

_LOG_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_LOG_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LOG_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


def straight_kn(n, max_cells):
    out = []
    for lam in partitions_upto(max_cells, n):
        if lam:
            out.extend(enumerate_kn(lam, n))
    return out


def random_kn(rng: random.Random, n: int, max_cells: int) -> Tableau:
    """A random straight KN tableau: random shape, then a random walk of crystal operators."""
    shapes = [lam for lam in partitions_upto(max_cells, n) if lam]
    t = Tableau.yamanouchi(rng.choice(shapes), n)
    for _ in range(rng.randrange(6 * max_cells * n)):
        op = f if rng.random() < 0.7 else e
        u = op(t, rng.randrange(1, n + 1))
        if u is not None:
            t = u
    return t
