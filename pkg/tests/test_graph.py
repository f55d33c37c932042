from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minla import (
    Arrangement,
    Graph,
    InvalidArrangement,
    InvalidGraph,
    brute_force_minla,
    connected_components,
    cost,
    degree_bounds,
)
from minla.graph import integral_degree_bound

from .conftest import py_cost, small_graphs


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


class TestGraph:
    def test_adjacency_sorted_and_symmetric(self, two_cliques):
        assert two_cliques.adjacency == ((2, 3), (1, 3), (1, 2, 4), (3,))
        assert two_cliques.m == 4
        assert two_cliques.degree(3) == 3
        assert two_cliques.has_edge(4, 3) and not two_cliques.has_edge(1, 4)

    def test_edge_orientation_ignored(self):
        assert Graph.from_edges(3, [(2, 1), (3, 2)]) == Graph.from_edges(3, [(1, 2), (2, 3)])

    @pytest.mark.parametrize(
        "n, edges",
        [(3, [(1, 1)]), (3, [(1, 2), (2, 1)]), (3, [(1, 4)]), (3, [(0, 1)]), (2, [(1, 2, 3)])],
    )
    def test_invalid_edges(self, n, edges):
        with pytest.raises(InvalidGraph):
            Graph.from_edges(n, edges)

    def test_arrays_are_read_only(self, k3):
        with pytest.raises(ValueError):
            k3._indices[0] = 2

    @given(small_graphs())
    def test_invariants(self, g):
        adj = g.adjacency
        for v, nb in enumerate(adj, start=1):
            assert list(nb) == sorted(set(nb))
            assert v not in nb
            for u in nb:
                assert v in adj[u - 1]
        assert 2 * g.m == sum(len(nb) for nb in adj)

    def test_relabel(self, path3):
        g = path3.relabel([2, 1, 3])
        assert sorted(g.edges()) == [(1, 2), (1, 3)]


class TestArrangement:
    def test_from_order_roundtrip(self):
        a = Arrangement.from_order([3, 1, 2])
        assert a.as_tuple() == (2, 3, 1)
        assert a.order.tolist() == [3, 1, 2]
        assert a.reversed().order.tolist() == [2, 1, 3]

    @pytest.mark.parametrize("positions", [[1, 1, 2], [0, 1, 2], [1, 2, 4]])
    def test_not_bijective(self, positions):
        with pytest.raises(InvalidArrangement):
            Arrangement(positions)

    def test_mapping_vertex_out_of_range(self):
        with pytest.raises(InvalidArrangement):
            Arrangement.from_mapping({1: 1, 2: 2, 5: 3})


class TestCost:
    def test_k3_identity(self, k3):
        assert cost(k3, Arrangement.identity(3)) == 4

    def test_path_identity(self, path3):
        assert cost(path3, Arrangement.identity(3)) == 2

    def test_path_swapped(self, path3):
        assert cost(path3, Arrangement([2, 1, 3])) == 3

    def test_size_mismatch(self, k3):
        with pytest.raises(InvalidArrangement):
            cost(k3, Arrangement.identity(4))

    def test_not_an_arrangement(self, k3):
        with pytest.raises(InvalidArrangement):
            cost(k3, [1, 2, 3])

    @given(small_graphs(), st.randoms())
    def test_matches_reference_and_reversal(self, g, rnd):
        order = list(range(1, g.n + 1))
        rnd.shuffle(order)
        a = Arrangement.from_order(order)
        pos = dict(zip(range(1, g.n + 1), a.positions.tolist()))
        assert cost(g, a) == py_cost(list(g.edges()), pos)
        assert cost(g, a) == cost(g, a.reversed())

    @given(st.integers(1, 30), st.randoms())
    def test_complete_graph_permutation_invariant(self, n, rnd):
        order = list(range(1, n + 1))
        rnd.shuffle(order)
        assert cost(complete(n), Arrangement.from_order(order)) == n * (n * n - 1) // 6


class TestDegreeBounds:
    def test_k3(self, k3):
        assert degree_bounds(k3) == (Fraction(3), 9)

    def test_two_cliques(self, two_cliques):
        assert degree_bounds(two_cliques) == (Fraction(17, 4), 13)

    @pytest.mark.parametrize("n", [1, 3, 10])
    def test_edgeless(self, n):
        assert degree_bounds(Graph.from_edges(n, [])) == (0, 0)

    @given(small_graphs(max_n=12))
    def test_upper_within_four_times_lower(self, g):
        a, b = degree_bounds(g)
        assert isinstance(a, Fraction) and isinstance(b, int)
        assert b <= 4 * a

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(max_n=7))
    def test_lower_bounds_below_optimum(self, g):
        a, _ = degree_bounds(g)
        strong = integral_degree_bound(g)
        _, opt = brute_force_minla(g)
        assert a <= strong <= opt


class TestComponents:
    def test_k3(self, k3):
        assert connected_components(k3) == [(1, 2, 3)]

    def test_two_edges(self):
        assert connected_components(Graph.from_edges(4, [(1, 2), (3, 4)])) == [(1, 2), (3, 4)]

    def test_edgeless(self):
        assert connected_components(Graph.from_edges(3, [])) == [(1,), (2,), (3,)]

    def test_ordered_by_smallest_member(self):
        g = Graph.from_edges(5, [(2, 5), (1, 4)])
        assert connected_components(g) == [(1, 4), (2, 5), (3,)]

    @given(small_graphs())
    def test_partition(self, g):
        comps = connected_components(g)
        flat = sorted(v for c in comps for v in c)
        assert flat == list(range(1, g.n + 1))
        label = {v: i for i, c in enumerate(comps) for v in c}
        assert all(label[u] == label[v] for u, v in g.edges())
        assert [c[0] for c in comps] == sorted(c[0] for c in comps)
