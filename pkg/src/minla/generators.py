"""Instance factories: clique-chain graphs, random proper interval graphs and
random interval models.

Randomness comes from :class:`Rng`, a PCG64 bit stream with bounded draws
defined in this module, so a seed reproduces the same instance regardless of
how numpy's ``Generator`` methods evolve.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import RangeOutOfBounds
from .graph import Graph
from .intervals import IntervalSet

_TWO64 = 1 << 64


class Rng:
    """Seeded PCG64 stream.

    Every draw consumes whole 64-bit outputs of ``PCG64(seed).random_raw()``:
    ``below(k)`` rejects outputs at or above the largest multiple of ``k`` and
    reduces the rest modulo ``k``.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._bits = np.random.PCG64(self.seed)

    def raw(self) -> int:
        return int(self._bits.random_raw())

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = _TWO64 - _TWO64 % k
        while True:
            x = self.raw()
            if x < limit:
                return x % k

    def integers(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: Fraction) -> bool:
        """Bernoulli draw with exact rational probability ``p``."""
        if p <= 0:
            return False
        if p >= 1:
            return True
        return self.below(p.denominator) < p.numerator

    def permutation(self, n: int) -> list[int]:
        """Fisher-Yates shuffle of ``1..n``."""
        p = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            p[i], p[j] = p[j], p[i]
        return p


def normalize_ranges(ranges: Iterable[Sequence[int]]) -> list[tuple[int, int]]:
    """Deduplicate and drop ranges strictly contained in another one.

    The survivors are returned sorted; both endpoints then increase strictly.
    """
    rs = sorted({(int(a), int(b)) for a, b in ranges}, key=lambda r: (r[0], -r[1]))
    out = []
    reach = 0
    for a, b in rs:
        if b > reach:
            out.append((a, b))
            reach = b
    return out


def generate_chain_graph(n: int, cliques: Iterable[Sequence[int]]) -> Graph:
    """Place vertices ``1..n`` on a line and make each range ``[a, b]`` a clique."""
    if n < 1:
        raise RangeOutOfBounds(f"need at least one vertex, got n={n}")
    ranges = [tuple(r) for r in cliques]
    for r in ranges:
        if len(r) != 2 or not 1 <= r[0] <= r[1] <= n:
            raise RangeOutOfBounds(f"range {list(r)} not within 1..{n}")
    kept = normalize_ranges(ranges)
    slots = np.arange(1, n + 1)
    if kept:
        lo = np.array([a for a, _ in kept])
        hi = np.array([b for _, b in kept])
        # last range starting at or before i reaches furthest right;
        # first range ending at or after i reaches furthest left
        j = np.searchsorted(lo, slots, side="right") - 1
        right = np.where(j >= 0, hi[np.maximum(j, 0)], slots)
        right = np.maximum(right, slots)
        j = np.searchsorted(hi, slots, side="left")
        left = np.where(j < len(hi), lo[np.minimum(j, len(lo) - 1)], slots)
        left = np.minimum(left, slots)
    else:
        left = right = slots
    span = right - left + 1
    total = int(span.sum())
    starts = np.repeat(left, span)
    offset = np.arange(total) - np.repeat(np.cumsum(span) - span, span)
    vals = starts + offset
    owner = np.repeat(slots, span)
    keep = vals != owner
    indices = vals[keep] - 1
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(span - 1, out=indptr[1:])
    return Graph(n, indptr, indices)


def random_reach(n: int, density: Fraction, rng: Rng) -> list[int]:
    reach = []
    r = 0
    for i in range(1, n + 1):
        r = max(r, i)
        while r < n and rng.chance(density):
            r += 1
        reach.append(r)
    return reach


def random_proper_interval(n: int, density, seed: int) -> Graph:
    """Random proper interval graph with randomly permuted vertex labels.

    A right reach walks along slots ``1..n`` and is extended one slot at a
    time with probability ``density``; slot ``i`` becomes the clique
    ``[i, reach_i]``. Density 0 gives an edgeless graph, density 1 gives K_n.
    """
    density = Fraction(density)
    if not 0 <= density <= 1:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    rng = Rng(seed)
    reach = random_reach(n, density, rng)
    g = generate_chain_graph(n, [(i, r) for i, r in enumerate(reach, start=1)])
    return g.relabel(rng.permutation(n))


def random_intervals(n: int, span: int, seed: int) -> IntervalSet:
    """``n`` intervals with integer endpoints uniform on ``[1, span]``."""
    if n < 1 or span < 1:
        raise ValueError("need n >= 1 and span >= 1")
    return draw_intervals(Rng(seed), n, span)


def draw_intervals(rng: Rng, n: int, span: int) -> IntervalSet:
    out = []
    for _ in range(n):
        a, b = rng.integers(1, span), rng.integers(1, span)
        out.append((min(a, b), max(a, b)))
    return IntervalSet(out)


def proper_interval_model(reach: Sequence[int]) -> IntervalSet:
    """Proper interval model of the chain graph whose slot ``i`` reaches ``reach[i-1]``.

    Slot ``i`` gets ``[i, reach_i + i/(n+1)]``: both endpoints strictly
    increase, so no interval contains another, and the fractional shift never
    crosses the next integer so adjacency is unchanged.
    """
    n = len(reach)
    return IntervalSet([(Fraction(i), reach[i - 1] + Fraction(i, n + 1)) for i in range(1, n + 1)])


def random_proper_intervals(n: int, density, seed: int) -> IntervalSet:
    """Random proper interval model; same reach walk as :func:`random_proper_interval`."""
    return proper_interval_model(random_reach(n, Fraction(density), Rng(seed)))


def chain_family(n: int, width: int = 4, step: int = 2) -> Graph:
    """Benchmark family: cliques ``[1 + step*j, width + step*j]`` covering ``1..n``."""
    ranges = [(a, min(n, a + width - 1)) for a in range(1, max(n - width + 2, 2), step)]
    if ranges[-1][1] < n:
        ranges.append((max(1, n - width + 1), n))
    return generate_chain_graph(n, ranges)


def connected_chain_ranges(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every set of non-nested ranges whose chain graph on ``1..n`` is connected.

    Each yielded set is in normalized form and distinct sets give distinct
    labelled graphs, so this enumerates connected chain graphs without repeats.
    """
    if n == 1:
        yield [(1, 1)]
        return

    def extend(prefix):
        a, b = prefix[-1]
        if b == n:
            yield list(prefix)
            return
        for a2 in range(a + 1, b + 1):
            for b2 in range(b + 1, n + 1):
                prefix.append((a2, b2))
                yield from extend(prefix)
                prefix.pop()

    for b in range(2, n + 1):
        yield from extend([(1, b)])
