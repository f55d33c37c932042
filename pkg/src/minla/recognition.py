"""Proper interval graph recognition.

Three Lex-BFS sweeps (the second and third breaking ties by "latest in the
previous sweep") produce a candidate order; the candidate is accepted only if
it passes the umbrella check, so a returned chain is always self-certified.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from . import _kernels
from .errors import PreconditionViolated
from .graph import Arrangement, Graph, check_arrangement, component_labels


class CliqueChain:
    """Maximal cliques of a proper interval graph as consecutive layout ranges.

    ``order`` is the vertex layout (``order[0]`` sits at position 1) and
    ``ranges`` is a ``(k, 2)`` array of 1-based inclusive position ranges,
    strictly increasing in both columns.
    """

    __slots__ = ("_order", "_ranges")

    def __init__(self, order, ranges):
        self._order = np.array(order, dtype=np.int64).reshape(-1)
        self._ranges = np.array(ranges, dtype=np.int64).reshape(-1, 2)
        self._order.setflags(write=False)
        self._ranges.setflags(write=False)

    @property
    def order(self) -> np.ndarray:
        return self._order

    @property
    def ranges(self) -> np.ndarray:
        return self._ranges

    @property
    def k(self) -> int:
        return len(self._ranges)

    @property
    def arrangement(self) -> Arrangement:
        return Arrangement.from_order(self._order)

    def cliques(self) -> Iterator[tuple[int, ...]]:
        """Vertex tuples of the cliques, in chain order."""
        for lo, hi in self._ranges.tolist():
            yield tuple(self._order[lo - 1:hi].tolist())

    def to_graph(self) -> Graph:
        """Rebuild the graph as the union of the cliques' edge sets."""
        from .generators import generate_chain_graph

        if len(self._order) == 0:
            return Graph.from_edges(0, [])
        return generate_chain_graph(len(self._order), self._ranges.tolist()).relabel(self._order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliqueChain):
            return NotImplemented
        return np.array_equal(self._order, other._order) and np.array_equal(self._ranges, other._ranges)

    def __repr__(self) -> str:
        if len(self._order) <= 12:
            return f"CliqueChain(order={self._order.tolist()}, ranges={self._ranges.tolist()})"
        return f"CliqueChain(n={len(self._order)}, k={self.k})"


def lex_bfs(g: Graph, priority=None) -> np.ndarray:
    """Lex-BFS visiting order (1-based vertex ids).

    Ties go to the vertex listed earliest in ``priority``; the default is
    ascending vertex id.
    """
    if priority is None:
        pri = np.arange(g.n, dtype=np.int64)
    else:
        pri = np.asarray(priority, dtype=np.int64) - 1
    return _kernels.lex_bfs(g.n, g._indptr, g._indices, pri) + 1


def _three_sweep(g: Graph) -> np.ndarray:
    n, ptr, idx = g.n, g._indptr, g._indices
    s = _kernels.lex_bfs(n, ptr, idx, np.arange(n, dtype=np.int64))
    for _ in range(2):
        s = _kernels.lex_bfs(n, ptr, idx, s[::-1].copy())
    return s


def verify_umbrella(g: Graph, order: Arrangement) -> bool:
    """Whether every closed neighbourhood sits on consecutive positions of ``order``."""
    check_arrangement(g, order)
    return bool(_kernels.umbrella_ok(g.n, g._indptr, g._indices, order.positions - 1))


def _chain_from_layout(g: Graph, layout: np.ndarray, pos: np.ndarray) -> CliqueChain:
    # layout: 0-based vertices by slot; pos: 0-based slot of each vertex
    reach = _kernels.right_reach(g.n, g._indptr, g._indices, layout, pos)
    keep = np.ones(g.n, dtype=bool)
    keep[1:] = reach[1:] > reach[:-1]
    lo = np.flatnonzero(keep)
    return CliqueChain(layout + 1, np.stack([lo + 1, reach[lo] + 1], axis=1))


def clique_chain_from_order(g: Graph, order: Arrangement) -> CliqueChain:
    """Extract the maximal clique ranges of an umbrella order.

    In an umbrella order the closed right-neighbourhood of each slot is a
    clique ending at its right reach; a slot starts a maximal clique exactly
    when its reach exceeds the previous slot's (otherwise its range is nested).
    """
    if not verify_umbrella(g, order):
        raise PreconditionViolated("order does not have the umbrella property")
    pos = order.positions - 1
    return _chain_from_layout(g, order.order - 1, pos)


def recognize_proper_interval(g: Graph) -> CliqueChain | None:
    """Return a certified clique chain for ``g``, or ``None`` if ``g`` is not
    a proper interval graph.

    Components are laid out one after another by smallest vertex id; isolated
    vertices become singleton cliques.
    """
    if g.n == 0:
        return CliqueChain([], np.zeros((0, 2)))
    sweep = _three_sweep(g)
    _, labels = component_labels(g)
    layout = sweep[np.argsort(labels[sweep], kind="stable")]
    pos = np.empty(g.n, dtype=np.int64)
    pos[layout] = np.arange(g.n)
    if not _kernels.umbrella_ok(g.n, g._indptr, g._indices, pos):
        return None
    return _chain_from_layout(g, layout, pos)
