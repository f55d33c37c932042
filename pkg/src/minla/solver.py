"""Exact minimum linear arrangement of proper interval graphs."""

from __future__ import annotations

import numpy as np

from .errors import PreconditionViolated
from .graph import Arrangement, Graph, check_arrangement, cost
from .recognition import CliqueChain, recognize_proper_interval


def solve_proper_interval(g: Graph) -> tuple[Arrangement, int] | None:
    """Optimal arrangement and its cost, or ``None`` if ``g`` is not proper interval.

    The arrangement is the recognition order: each component's clique chain
    laid out left to right, components by smallest vertex id. Any order that
    keeps the cliques consecutive and in chain order is optimal; this one is
    the canonical representative.
    """
    chain = recognize_proper_interval(g)
    if chain is None:
        return None
    a = chain.arrangement
    return a, cost(g, a)


def _check_cover(chain: CliqueChain, g: Graph) -> None:
    order = chain.order
    if len(order) != g.n or (g.n and np.bincount(order, minlength=g.n + 1)[1:].min() != 1):
        raise PreconditionViolated("chain order is not a permutation of the graph's vertices")
    if g.m == 0:
        return
    slot = np.empty(g.n, dtype=np.int64)
    slot[order - 1] = np.arange(1, g.n + 1)
    # furthest slot reachable by a range starting at or before each slot
    reach = np.zeros(g.n + 1, dtype=np.int64)
    np.maximum.at(reach, chain.ranges[:, 0], chain.ranges[:, 1])
    reach = np.maximum.accumulate(reach)
    e = g.edge_array()
    p, q = slot[e[:, 0] - 1], slot[e[:, 1] - 1]
    lo, hi = np.minimum(p, q), np.maximum(p, q)
    if np.any(reach[lo] < hi):
        raise PreconditionViolated("some edge lies in no clique of the chain")


def is_n_order(chain: CliqueChain, a: Arrangement, g: Graph) -> bool:
    """Whether ``a`` keeps every clique of ``chain`` on consecutive positions,
    in chain order or in fully reversed chain order."""
    check_arrangement(g, a)
    _check_cover(chain, g)
    p = a.positions[chain.order - 1]
    left = np.empty(chain.k, dtype=np.int64)
    for i, (lo, hi) in enumerate(chain.ranges.tolist()):
        block = p[lo - 1:hi]
        mn = int(block.min())
        if int(block.max()) - mn != hi - lo:
            return False
        left[i] = mn
    seq = np.argsort(left)
    idx = np.arange(chain.k)
    return bool(np.array_equal(seq, idx) or np.array_equal(seq, idx[::-1]))
