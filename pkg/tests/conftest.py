import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dowkerrel import fixtures, from_matrix, is_strongly_connected  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"

# criterion number -> (description, passed); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def fix_a():
    return fixtures.example_4x5()


@pytest.fixture
def fix_n():
    return fixtures.nilpotent_3()


@pytest.fixture
def fix_c3():
    return fixtures.cycle_3()


@pytest.fixture
def fix_j3():
    return fixtures.all_ones_3()


@pytest.fixture
def fix_i3():
    return fixtures.identity_3()


@pytest.fixture
def data_dir():
    return DATA


def random_relation(rng: random.Random, m: int, n: int, density: float | None = None):
    if density is None:
        density = rng.random()
    rows = [[1 if rng.random() < density else 0 for _ in range(n)] for _ in range(m)]
    return from_matrix(rows, [f"x{i}" for i in range(1, m + 1)], [f"y{k}" for k in range(1, n + 1)])


def random_self_relation(rng: random.Random, n: int, density: float | None = None):
    if density is None:
        density = rng.random()
    return from_matrix([[1 if rng.random() < density else 0 for _ in range(n)] for _ in range(n)])


def random_strongly_connected(rng: random.Random, max_n: int):
    while True:
        R = random_self_relation(rng, rng.randint(1, max_n))
        if is_strongly_connected(R) and any(R.rows):
            return R


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        desc, ok = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {desc}")
