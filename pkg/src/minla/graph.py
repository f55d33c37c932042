"""Graph and arrangement types plus the linear-arrangement cost functional.

Vertices and positions are 1-indexed throughout the public API. Internally the
graph is stored as a CSR pair of read-only numpy arrays with 0-based ids, which
is what the compiled kernels in :mod:`minla._kernels` consume.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc

from .errors import CostOverflow, InvalidArrangement, InvalidGraph

_INT64_MAX = np.iinfo(np.int64).max


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Immutable undirected simple graph on vertices ``1..n``.

    Build instances with :meth:`from_edges` (validating) or through the
    generators; the constructor itself is private plumbing.
    """

    __slots__ = ("_n", "_indptr", "_indices", "_adjacency")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self._n = int(n)
        self._indptr = _frozen(np.ascontiguousarray(indptr, dtype=np.int64))
        self._indices = _frozen(np.ascontiguousarray(indices, dtype=np.int64))
        self._adjacency = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from an edge iterable; either orientation is accepted.

        Raises :class:`InvalidGraph` on self-loops, duplicate edges or
        endpoints outside ``1..n``.
        """
        if n < 0:
            raise InvalidGraph(f"vertex count must be nonnegative, got {n}")
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if e.size == 0:
            e = e.reshape(0, 2)
        if e.ndim != 2 or e.shape[1] != 2:
            raise InvalidGraph("edges must be pairs (u, v)")
        if e.size and (e.min() < 1 or e.max() > n):
            raise InvalidGraph(f"edge endpoint outside 1..{n}")
        if np.any(e[:, 0] == e[:, 1]):
            v = int(e[e[:, 0] == e[:, 1]][0, 0])
            raise InvalidGraph(f"self-loop at vertex {v}")
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        key = np.sort(lo * (n + 1) + hi)
        dup = np.flatnonzero(np.diff(key) == 0)
        if dup.size:
            k = int(key[dup[0]])
            raise InvalidGraph(f"duplicate edge ({k // (n + 1)}, {k % (n + 1)})")
        return cls._from_pairs(n, lo - 1, hi - 1)

    @classmethod
    def _from_pairs(cls, n: int, u: np.ndarray, v: np.ndarray) -> "Graph":
        # u, v: 0-based endpoints of distinct, loop-free edges
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, indptr, dst)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._indices) // 2

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbour tuples; ``adjacency[v - 1]`` lists N(v)."""
        if self._adjacency is None:
            flat = (self._indices + 1).tolist()
            ptr = self._indptr.tolist()
            self._adjacency = tuple(tuple(flat[ptr[i]:ptr[i + 1]]) for i in range(self._n))
        return self._adjacency

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        lo, hi = self._indptr[v - 1], self._indptr[v]
        return tuple((self._indices[lo:hi] + 1).tolist())

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._indptr[v] - self._indptr[v - 1])

    @property
    def degrees(self) -> np.ndarray:
        """Degree array; entry ``v - 1`` is the degree of vertex ``v``."""
        return np.diff(self._indptr)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        row = self._indices[self._indptr[u - 1]:self._indptr[u]]
        i = np.searchsorted(row, v - 1)
        return bool(i < len(row) and row[i] == v - 1)

    def edge_array(self) -> np.ndarray:
        """``(m, 2)`` array of 1-based edges ``(u, v)`` with ``u < v``, sorted."""
        src = np.repeat(np.arange(self._n, dtype=np.int64), np.diff(self._indptr))
        keep = src < self._indices
        return np.stack([src[keep] + 1, self._indices[keep] + 1], axis=1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, v in self.edge_array().tolist():
            yield u, v

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Return the isomorphic graph where vertex ``v`` becomes ``mapping[v - 1]``."""
        p = np.asarray(mapping, dtype=np.int64)
        if sorted(p.tolist()) != list(range(1, self._n + 1)):
            raise InvalidGraph("relabelling must be a permutation of 1..n")
        e = self.edge_array()
        return Graph._from_pairs(self._n, p[e[:, 0] - 1] - 1, p[e[:, 1] - 1] - 1)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self._n:
            raise InvalidGraph(f"vertex {v} outside 1..{self._n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
        )

    def __hash__(self) -> int:
        return hash((self._n, self._indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


class Arrangement:
    """A bijection from vertices ``1..n`` to positions ``1..n``.

    ``positions[v - 1]`` is the position of vertex ``v``.
    """

    __slots__ = ("_pos",)

    def __init__(self, positions: Sequence[int] | np.ndarray):
        p = np.array(positions, dtype=np.int64).reshape(-1)
        n = len(p)
        if n and (p.min() < 1 or p.max() > n):
            raise InvalidArrangement(f"position outside 1..{n}")
        if n and np.bincount(p, minlength=n + 1)[1:].min() != 1:
            raise InvalidArrangement("positions are not a bijection onto 1..n")
        self._pos = _frozen(p)

    @classmethod
    def from_order(cls, order: Sequence[int] | np.ndarray) -> "Arrangement":
        """Build from the vertex sequence laid out at positions 1, 2, ..., n."""
        o = np.array(order, dtype=np.int64).reshape(-1)
        n = len(o)
        if n and (o.min() < 1 or o.max() > n):
            raise InvalidArrangement(f"vertex id outside 1..{n}")
        if n and np.bincount(o, minlength=n + 1)[1:].min() != 1:
            raise InvalidArrangement("order lists some vertex twice")
        p = np.empty(n, dtype=np.int64)
        p[o - 1] = np.arange(1, n + 1)
        return cls._trusted(p)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], n: int | None = None) -> "Arrangement":
        n = len(mapping) if n is None else n
        if len(mapping) != n:
            raise InvalidArrangement(f"expected {n} vertices, got {len(mapping)}")
        p = [0] * n
        for v, pos in mapping.items():
            if not 1 <= v <= n:
                raise InvalidArrangement(f"vertex id {v} outside 1..{n}")
            p[v - 1] = pos
        return cls(p)

    @classmethod
    def identity(cls, n: int) -> "Arrangement":
        return cls._trusted(np.arange(1, n + 1, dtype=np.int64))

    @classmethod
    def _trusted(cls, p: np.ndarray) -> "Arrangement":
        a = object.__new__(cls)
        a._pos = _frozen(p)
        return a

    @property
    def n(self) -> int:
        return len(self._pos)

    @property
    def positions(self) -> np.ndarray:
        return self._pos

    @property
    def order(self) -> np.ndarray:
        """Vertices sorted by position."""
        o = np.empty(len(self._pos), dtype=np.int64)
        o[self._pos - 1] = np.arange(1, len(self._pos) + 1)
        return o

    def position(self, v: int) -> int:
        if not 1 <= v <= len(self._pos):
            raise InvalidArrangement(f"vertex id {v} outside 1..{len(self._pos)}")
        return int(self._pos[v - 1])

    def reversed(self) -> "Arrangement":
        return Arrangement._trusted(len(self._pos) + 1 - self._pos)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self._pos.tolist())

    def __len__(self) -> int:
        return len(self._pos)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Arrangement):
            return NotImplemented
        return np.array_equal(self._pos, other._pos)

    def __hash__(self) -> int:
        return hash(self._pos.tobytes())

    def __repr__(self) -> str:
        if len(self._pos) <= 12:
            return f"Arrangement(order={self.order.tolist()})"
        return f"Arrangement(n={len(self._pos)})"


@dataclass(frozen=True)
class CostReport:
    """Cost of an arrangement together with the degree-based bounds.

    ``ratio_certificate`` is ``cost / lower_bound_A``; it is ``None`` when the
    lower bound is zero (edgeless graph, where every arrangement costs 0).
    """

    cost: int
    lower_bound_A: Fraction
    upper_bound_B: int
    ratio_certificate: Fraction | None


def check_arrangement(g: Graph, a: Arrangement) -> None:
    if not isinstance(a, Arrangement):
        raise InvalidArrangement(f"expected an Arrangement, got {type(a).__name__}")
    if a.n != g.n:
        raise InvalidArrangement(f"arrangement covers {a.n} vertices, graph has {g.n}")


def cost(g: Graph, a: Arrangement) -> int:
    """Sum over edges of the distance between endpoint positions."""
    check_arrangement(g, a)
    if g.m and g.m > _INT64_MAX // max(g.n - 1, 1):
        raise CostOverflow(f"cost of a graph with n={g.n}, m={g.m} may exceed 64 bits")
    e = g.edge_array()
    p = a.positions
    return int(np.abs(p[e[:, 0] - 1] - p[e[:, 1] - 1]).sum())


def degree_bounds(g: Graph) -> tuple[Fraction, int]:
    """Return ``(A, B)``.

    ``A = sum_v (d/2)(d/2 + 1) / 2`` lower-bounds every arrangement's cost;
    ``B = sum_v d(d+1)/2`` upper-bounds the cost of a start-ordered interval
    layout. ``(d/2)(d/2+1)/2 == d(d+2)/8`` keeps ``A`` exact.
    """
    d = g.degrees
    a = Fraction(int((d * (d + 2)).sum()), 8)
    b = int((d * (d + 1)).sum()) // 2
    return a, b


def integral_degree_bound(g: Graph) -> Fraction:
    """Per-vertex integral strengthening of ``A``.

    A vertex of degree ``d`` can at best split its neighbours into
    ``floor(d/2)`` and ``ceil(d/2)`` on either side, so its incident edges
    cost at least ``T(floor(d/2)) + T(ceil(d/2))`` with ``T(k) = k(k+1)/2``.
    Half the sum over vertices bounds the optimum and is never below ``A``.
    """
    d = g.degrees
    lo, hi = d // 2, d - d // 2
    return Fraction(int((lo * (lo + 1) // 2 + hi * (hi + 1) // 2).sum()), 2)


def component_labels(g: Graph) -> tuple[int, np.ndarray]:
    """Component count and 0-based labels, numbered by smallest member."""
    if g.n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    mat = csr_matrix((np.ones(len(g._indices), dtype=np.int8), g._indices, g._indptr), shape=(g.n, g.n))
    k, labels = _cc(mat, directed=False)
    # scipy numbers components in order of first appearance, i.e. by smallest member;
    # remap anyway so the contract doesn't rest on that detail
    first = np.full(k, g.n, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(g.n))
    rank = np.empty(k, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(k)
    return k, rank[labels]


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, listed by smallest member."""
    k, labels = component_labels(g)
    order = np.argsort(labels, kind="stable")
    bounds = np.cumsum(np.bincount(labels, minlength=k))[:-1]
    return [tuple((part + 1).tolist()) for part in np.split(order, bounds)] if k else []
