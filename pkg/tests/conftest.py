import random

import pytest
from hypothesis import strategies as st

from sobertool.finite import topology_from_poset
from sobertool.order import FinitePoset

ACCEPTANCE_LINES = []


@st.composite
def posets(draw, max_size=6):
    """Random posets: relations only go from lower to higher index, so they are acyclic."""
    n = draw(st.integers(min_value=1, max_value=max_size))
    names = [f"p{i}" for i in range(n)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return FinitePoset(names, chosen)


@st.composite
def spaces(draw, max_size=5):
    return topology_from_poset(draw(posets(max_size)), "alexandroff")


@pytest.fixture
def rng():
    return random.Random(7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
