"""Interval models, clique orders and the start-ordered 4-approximation.

Intervals are closed and endpoints are exact (``int`` or ``Fraction``), so
touching intervals intersect and no comparison goes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedInterval
from .graph import Arrangement, CostReport, Graph, check_arrangement, cost, degree_bounds


def as_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise MalformedInterval(f"not a rational endpoint: {x!r}")
    if isinstance(x, float) and not np.isfinite(x):
        raise MalformedInterval(f"not a finite endpoint: {x!r}")
    try:
        return Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedInterval(f"not a rational endpoint: {x!r}") from exc


class IntervalSet:
    """Closed intervals indexed by vertex; ``intervals[v - 1]`` belongs to ``v``."""

    __slots__ = ("_iv",)

    def __init__(self, intervals: Iterable[Sequence]):
        iv = []
        for v, pair in enumerate(intervals, start=1):
            if len(pair) != 2:
                raise MalformedInterval(f"interval {v} is not a (start, end) pair")
            a, b = as_rational(pair[0]), as_rational(pair[1])
            if a > b:
                raise MalformedInterval(f"interval {v} has start {a} > end {b}")
            iv.append((a, b))
        self._iv = tuple(iv)

    @property
    def intervals(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return self._iv

    @property
    def n(self) -> int:
        return len(self._iv)

    def __len__(self) -> int:
        return len(self._iv)

    def __iter__(self):
        return iter(self._iv)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._iv == other._iv

    def __hash__(self) -> int:
        return hash(self._iv)

    def __repr__(self) -> str:
        body = ", ".join(f"[{a}, {b}]" for a, b in self._iv)
        return f"IntervalSet({body})"


@dataclass(frozen=True)
class CliqueOrder:
    """Maximal cliques ``C_1..C_k`` in consecutive order.

    ``first[v - 1]`` and ``last[v - 1]`` are the 1-based indices of the first
    and last clique containing vertex ``v``.
    """

    cliques: tuple[frozenset[int], ...]
    first: tuple[int, ...]
    last: tuple[int, ...]

    def is_consistent(self) -> bool:
        """Check consecutiveness and maximality against the stored cliques."""
        n = len(self.first)
        members = [[] for _ in range(n)]
        for i, c in enumerate(self.cliques, start=1):
            for v in c:
                members[v - 1].append(i)
        for v in range(n):
            if members[v] != list(range(self.first[v], self.last[v] + 1)):
                return False
        cs = self.cliques
        return all(not (a <= b) for i, a in enumerate(cs) for j, b in enumerate(cs) if i != j)


def graph_from_intervals(iv: IntervalSet) -> Graph:
    """Intersection graph of a set of closed intervals."""
    order = sorted(range(iv.n), key=lambda i: iv.intervals[i])
    edges = []
    for x, i in enumerate(order):
        end = iv.intervals[i][1]
        for j in order[x + 1:]:
            if iv.intervals[j][0] > end:
                break
            edges.append((i + 1, j + 1))
    return Graph.from_edges(iv.n, edges)


def clique_order_from_intervals(iv: IntervalSet) -> CliqueOrder:
    """Maximal cliques by a left-to-right endpoint sweep.

    The active set is snapshotted at a right endpoint only if some interval
    started since the previous snapshot; exactly those snapshots are maximal.
    Starts at a coordinate are processed before ends at it (closed intervals).
    """
    events = sorted(
        [(a, 0, v) for v, (a, _) in enumerate(iv.intervals, start=1)]
        + [(b, 1, v) for v, (_, b) in enumerate(iv.intervals, start=1)]
    )
    first = [0] * iv.n
    last = [0] * iv.n
    cliques: list[frozenset[int]] = []
    active: set[int] = set()
    grown = False
    for _, kind, v in events:
        if kind == 0:
            active.add(v)
            first[v - 1] = len(cliques) + 1
            grown = True
        else:
            if grown:
                cliques.append(frozenset(active))
                grown = False
            active.discard(v)
            last[v - 1] = len(cliques)
    return CliqueOrder(tuple(cliques), tuple(first), tuple(last))


def pi_order(co: CliqueOrder) -> Arrangement:
    """Order vertices by first clique, ties by last clique, then by id."""
    n = len(co.first)
    order = sorted(range(1, n + 1), key=lambda v: (co.first[v - 1], co.last[v - 1], v))
    return Arrangement.from_order(order)


def right_oriented_cost(g: Graph, a: Arrangement, v: int) -> int:
    """Total length of the edges at ``v`` whose other end lies further right."""
    check_arrangement(g, a)
    p = a.position(v)
    nb = np.asarray(g.neighbors(v), dtype=np.int64)
    if nb.size == 0:
        return 0
    d = a.positions[nb - 1] - p
    return int(d[d > 0].sum())


def approximate(iv: IntervalSet) -> tuple[Arrangement, CostReport]:
    """Start-ordered layout of an interval graph with its bound certificate.

    The returned cost is at most ``upper_bound_B <= 4 * lower_bound_A``, and
    ``lower_bound_A`` never exceeds the optimum.
    """
    g = graph_from_intervals(iv)
    a = pi_order(clique_order_from_intervals(iv))
    c = cost(g, a)
    lower, upper = degree_bounds(g)
    ratio = Fraction(c) / lower if lower else None
    return a, CostReport(c, lower, upper, ratio)
