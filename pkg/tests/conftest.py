import random

import pytest

from invchev.heisenberg import KClass, LaurentQ
from invchev.rootsystem import build_root_system
from invchev.weyl import identity, simple_reflection

# Lines recorded by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_element(rs, rng):
    w = identity(rs)
    for _ in range(2 * rs.npos):
        w = w * simple_reflection(rs, rng.randint(1, rs.rank))
    return w


def random_class(rs, rng, terms=3, span=1):
    """A small class with random affine Schubert terms and Laurent coefficients."""
    out = {}
    for _ in range(terms):
        w = random_element(rs, rng)
        xi = rs.from_root_coords([rng.randint(-span, span) for _ in range(rs.rank)])
        mu = tuple(rng.randint(-span, span) for _ in range(rs.rank))
        c = LaurentQ.mono(rng.randint(-2, 2), rng.choice([-2, -1, 1, 2]))
        out[(w, xi, mu)] = out[(w, xi, mu)] + c if (w, xi, mu) in out else c
    return KClass(rs, out)


@pytest.fixture
def a1():
    return build_root_system("A1")


@pytest.fixture
def a2():
    return build_root_system("A2")


@pytest.fixture
def rng():
    return random.Random(0)
