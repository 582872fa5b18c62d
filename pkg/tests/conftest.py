import numpy as np
import pytest
from hypothesis import strategies as st

from kdepset import _backend
from kdepset.graph import Graph

# 12-vertex worked example, relabeled from 1-based to 0-based ids.
EX12_EDGES_1BASED = [(1, 2), (1, 12), (2, 5), (2, 11), (3, 4), (3, 12), (5, 6),
                     (6, 11), (7, 8), (7, 12), (9, 10), (10, 11)]
EX12_DASHED_1BASED = [(1, 12), (2, 5), (3, 4), (6, 11), (7, 8), (9, 10)]
EX12_OPT_1BASED = {1, 2, 3, 4, 6, 7, 8, 9, 10}
EX12_COVER_1BASED = {2, 5, 11, 12}
EX12_OUTPUT_1BASED = {1, 3, 4, 6, 7, 8, 9, 10}


def zero_based(pairs):
    return [(a - 1, b - 1) for a, b in pairs]


def zero_based_set(ids):
    return {v - 1 for v in ids}


@pytest.fixture
def ex12():
    return Graph(12, zero_based(EX12_EDGES_1BASED))


@pytest.fixture
def ex12_dashed():
    return zero_based(EX12_DASHED_1BASED)


@pytest.fixture(params=sorted(_backend.available_backends()))
def backend(request):
    previous = _backend.BACKEND
    _backend.use(request.param)
    yield request.param
    _backend.use(previous)


def random_bipartite_edges(rng, n, p):
    left = (n + 1) // 2
    return [(a, b) for a in range(left) for b in range(left, n) if rng.random() < p]


@st.composite
def bipartite_graphs(draw, max_n=12):
    """Random bipartite graphs with a randomly placed bipartition."""
    n = draw(st.integers(0, max_n))
    sides = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    cross = [(a, b) for a in range(n) for b in range(a + 1, n) if sides[a] != sides[b]]
    edges = draw(st.lists(st.sampled_from(cross), unique=True)) if cross else []
    return Graph(n, edges)


@st.composite
def general_graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges, require_bipartite=False)


# one PASS/FAIL line per acceptance criterion, shown after the test run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
