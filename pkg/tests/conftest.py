import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from pctree.generators import random_connected, random_star_colored
from pctree.graph import EdgeColoredGraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def colored_graphs(draw, min_n=1, max_n=8, max_colors=4, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = [(u, v, draw(st.integers(1, max_colors))) for u, v in chosen]
    if connected:
        # a random spanning path keeps the graph connected
        order = draw(st.permutations(range(n)))
        have = {(u, v) for u, v, _ in edges}
        for a, b in zip(order, order[1:]):
            u, v = min(a, b), max(a, b)
            if (u, v) not in have:
                have.add((u, v))
                edges.append((u, v, draw(st.integers(1, max_colors))))
    return EdgeColoredGraph(n, edges)


@st.composite
def star_colored_graphs(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.floats(0.3, 0.9))
    return random_star_colored(n, p, seed=seed)


@st.composite
def connected_random(draw, min_n=4, max_n=9, max_colors=5):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.floats(0.3, 0.8))
    colors = draw(st.integers(1, max_colors))
    return random_connected(n, p, colors, seed=seed)


def path_graph(colors):
    return EdgeColoredGraph(len(colors) + 1, [(i, i + 1, c) for i, c in enumerate(colors)])


def complete_graph(n, color_of):
    return EdgeColoredGraph(n, [(u, v, color_of(u, v)) for u in range(n) for v in range(u + 1, n)])


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
