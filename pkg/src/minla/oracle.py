"""Exhaustive ground truth for small graphs.

Every arrangement of ``n`` vertices is materialised as a row of a
lexicographically ordered permutation table (row ``r`` holds the positions of
vertices ``1..n``), and costs are evaluated edge by edge over the whole table.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import TooLarge
from .generators import Rng, draw_intervals, proper_interval_model, random_reach
from .graph import Arrangement, Graph
from .intervals import IntervalSet, approximate, graph_from_intervals

THREADS_ENV = "MINLA_THREADS"


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=4)
def permutation_table(n: int) -> np.ndarray:
    """All permutations of ``1..n`` in lexicographic order, as an int8 array."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    table = np.zeros((1, 1), dtype=np.int8)
    for k in range(2, n + 1):
        rows = len(table)
        nxt = np.empty((rows * k, k), dtype=np.int8)
        for first in range(k):
            block = nxt[first * rows:(first + 1) * rows]
            block[:, 0] = first
            block[:, 1:] = table + (table >= first)
        table = nxt
    table += 1
    table.setflags(write=False)
    return table


@lru_cache(maxsize=4)
def _half_table(n: int) -> np.ndarray:
    # reversal swaps the relative order of vertices 1 and 2
    t = permutation_table(n)
    half = np.ascontiguousarray(t[t[:, 0] < t[:, 1]])
    half.setflags(write=False)
    return half


def _table_costs(g: Graph, table: np.ndarray, threads: int) -> np.ndarray:
    e = g.edge_array() - 1

    def chunk(rows: np.ndarray) -> np.ndarray:
        c = np.zeros(len(rows), dtype=np.int32)
        for u, v in e.tolist():
            c += np.abs(rows[:, u] - rows[:, v])
        return c

    if threads <= 1 or len(table) < 4096:
        return chunk(table)
    parts = np.array_split(table, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return np.concatenate(list(pool.map(chunk, parts)))


def _check_size(g: Graph, limit_n: int) -> None:
    if g.n > limit_n:
        raise TooLarge(f"n={g.n} exceeds the exhaustive limit {limit_n}")


def brute_force_minla(
    g: Graph, limit_n: int = 10, *, symmetry: bool = True, threads: int | None = None
) -> tuple[Arrangement, int]:
    """Minimum cost over all ``n!`` arrangements.

    Returns the lexicographically smallest optimal position vector. With
    ``symmetry`` only arrangements placing vertex 1 left of vertex 2 are
    scanned; mirror images of the optima found restore the full optimal set
    before the lexicographic choice, so both modes agree exactly.
    """
    _check_size(g, limit_n)
    threads = default_threads() if threads is None else threads
    if g.n < 2:
        a = Arrangement.identity(g.n)
        return a, 0
    table = _half_table(g.n) if symmetry else permutation_table(g.n)
    c = _table_costs(g, table, threads)
    best = int(c.min())
    if not symmetry:
        return Arrangement(table[int(np.argmin(c))]), best
    hits = table[c == best].astype(np.int64)
    cand = np.concatenate([hits, g.n + 1 - hits])
    first = np.lexsort(cand.T[::-1])[0]
    return Arrangement(cand[first]), best


def enumerate_optimal(g: Graph, limit_n: int = 8, *, threads: int | None = None) -> list[Arrangement]:
    """Every optimal arrangement, in lexicographic order of position vectors."""
    _check_size(g, limit_n)
    threads = default_threads() if threads is None else threads
    table = permutation_table(g.n)
    if g.n < 2:
        return [Arrangement(row) for row in table]
    c = _table_costs(g, table, threads)
    return [Arrangement(row) for row in table[c == c.min()]]


@dataclass(frozen=True)
class Counterexample:
    """Interval set on which the start-ordered layout is not optimal.

    ``trial_instance(max_n, seed, family)`` regenerates ``intervals`` when
    ``seed`` is not ``None``.
    """

    intervals: IntervalSet
    seed: int | None
    family: str
    max_n: int
    pi_cost: int
    optimum: int


def trial_instance(max_n: int, seed: int, family: str = "random") -> IntervalSet:
    """The interval set examined by the search trial with this seed."""
    rng = Rng(seed)
    n = rng.integers(1, max_n)
    if family == "random":
        return draw_intervals(rng, n, rng.integers(1, 2 * n))
    if family == "proper":
        return proper_interval_model(random_reach(n, Fraction(rng.integers(0, 4), 4), rng))
    raise ValueError(f"unknown family {family!r}")


def star_model(leaves: int) -> IntervalSet:
    """K_{1,leaves}: one long interval crossing ``leaves`` disjoint short ones."""
    return IntervalSet([(0, 3 * leaves)] + [(3 * i + 1, 3 * i + 2) for i in range(leaves)])


def _suboptimal(iv: IntervalSet) -> tuple[int, int] | None:
    a, report = approximate(iv)
    _, opt = brute_force_minla(graph_from_intervals(iv))
    return (report.cost, opt) if report.cost > opt else None


def find_pi_suboptimal(
    max_n: int, seed: int, trials: int, family: str = "random"
) -> Counterexample | None:
    """Search for an interval set where the start-ordered layout is beaten.

    Trial ``t`` examines ``trial_instance(max_n, seed + t, family)``. If every
    trial passes, stars up to ``max_n`` vertices are tried (random family only)
    before giving up with ``None``.
    """
    if max_n > 10:
        raise TooLarge(f"max_n={max_n} exceeds 10")
    if max_n < 1:
        return None
    for t in range(trials):
        iv = trial_instance(max_n, seed + t, family)
        hit = _suboptimal(iv)
        if hit:
            return Counterexample(iv, seed + t, family, max_n, *hit)
    if family == "random":
        for leaves in range(1, max_n):
            iv = star_model(leaves)
            hit = _suboptimal(iv)
            if hit:
                return Counterexample(iv, None, "star", max_n, *hit)
    return None
