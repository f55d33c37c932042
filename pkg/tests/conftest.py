"""Shared fixtures and pure-Python reference oracles.

The helpers here use only ``itertools`` and plain loops so they stay
independent of the numpy/numba code paths they check.
"""

import itertools

import pytest
from hypothesis import strategies as st

from minla import Graph, generate_chain_graph


def py_cost(edges, pos):
    """pos: dict vertex -> position."""
    return sum(abs(pos[u] - pos[v]) for u, v in edges)


def py_all_costs(n, edges):
    """Yield (position tuple, cost) for every arrangement, lexicographically."""
    for perm in itertools.permutations(range(1, n + 1)):
        pos = dict(zip(range(1, n + 1), perm))
        yield perm, py_cost(edges, pos)


def py_brute(n, edges):
    best = None
    for perm, c in py_all_costs(n, edges):
        if best is None or c < best[1]:
            best = (perm, c)
    return best


def py_umbrella(n, edges, order):
    """order: vertex sequence left to right."""
    pos = {v: i for i, v in enumerate(order)}
    nb = {v: {v} for v in range(1, n + 1)}
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    for v in range(1, n + 1):
        ps = sorted(pos[u] for u in nb[v])
        if ps[-1] - ps[0] != len(ps) - 1:
            return False
    return True


def py_exists_umbrella(n, edges):
    return any(py_umbrella(n, edges, o) for o in itertools.permutations(range(1, n + 1)))


@pytest.fixture
def two_cliques():
    return generate_chain_graph(4, [[1, 3], [3, 4]])


@pytest.fixture
def k3():
    return Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(1, 2), (2, 3)])


@pytest.fixture
def claw():
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def chain_specs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    ranges = draw(
        st.lists(
            st.tuples(st.integers(1, n), st.integers(1, n)).map(lambda t: (min(t), max(t))),
            max_size=6,
        )
    )
    return n, ranges


@st.composite
def interval_lists(draw, max_n=7, span=12):
    n = draw(st.integers(1, max_n))
    pts = st.tuples(st.integers(0, span), st.integers(0, span)).map(lambda t: (min(t), max(t)))
    return draw(st.lists(pts, min_size=n, max_size=n))
