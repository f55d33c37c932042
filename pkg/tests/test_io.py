from fractions import Fraction

import pytest
from hypothesis import given

from minla import Arrangement, IntervalSet, ParseError, generate_chain_graph
from minla import io

from .conftest import interval_lists, small_graphs


class TestEdgeList:
    def test_parse(self):
        text = "c two cliques\n\np 4 4\ne 1 2\ne 1 3\nc mid comment\ne 2 3\ne 3 4\n"
        assert io.parse_edge_list(text) == generate_chain_graph(4, [[1, 3], [3, 4]])

    @given(small_graphs(max_n=9))
    def test_roundtrip(self, g):
        assert io.parse_edge_list(io.format_edge_list(g, ["x"])) == g

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "e 1 2\n",
            "p 3 1\ne 2 1\n",
            "p 3 1\ne 1 4\n",
            "p 3 2\ne 1 2\n",
            "p 3 2\ne 1 2\ne 1 2\n",
            "p 3 1\ne 1 x\n",
            "p 3 1\nf 1 2\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            io.parse_edge_list(text)


class TestIntervals:
    def test_parse_rationals(self):
        iv = io.parse_intervals("c hi\nintervals 2\n1/2 3\n-1 0.5\n")
        assert iv.intervals == ((Fraction(1, 2), Fraction(3)), (Fraction(-1), Fraction(1, 2)))

    @given(interval_lists())
    def test_roundtrip(self, pairs):
        iv = IntervalSet([(Fraction(a, 3), Fraction(b, 3)) for a, b in pairs])
        assert io.parse_intervals(io.format_intervals(iv, ["seed=1"])) == iv

    def test_format(self):
        assert io.format_intervals(IntervalSet([(1, "3/2")]), ["seed=4"]) == "c seed=4\nintervals 1\n1 3/2\n"

    @pytest.mark.parametrize(
        "text",
        ["intervals 2\n1 2\n", "intervals 1\n2 1\n", "intervals 1\n1 nan\n", "intervals 1\n1/0 2\n", "p 1 0\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            io.parse_intervals(text)


class TestArrangement:
    def test_roundtrip(self):
        a = Arrangement.from_order([3, 1, 4, 2])
        assert io.parse_arrangement(io.format_arrangement(a), 4) == a

    @pytest.mark.parametrize("text", ["1 1\n1 2\n", "1 1\n2 1\n", "1 1\n3 2\n", "1\n"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            io.parse_arrangement(text, 2)

    def test_wrong_size(self):
        with pytest.raises(ParseError):
            io.parse_arrangement("1 1\n2 2\n", 3)


def test_parse_graph_detects_format():
    g = io.parse_graph("intervals 3\n1 3\n2 5\n6 7\n")
    assert sorted(g.edges()) == [(1, 2)]
    assert io.parse_graph("p 2 1\ne 1 2\n").m == 1
