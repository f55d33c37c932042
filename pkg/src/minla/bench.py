"""Timing of recognition and the exact solver on large chain graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .generators import chain_family, random_proper_interval
from .recognition import recognize_proper_interval
from .solver import solve_proper_interval

FAMILIES = ("chain", "proper")


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    recognize_s: float
    solve_s: float
    cost: int

    @property
    def total_s(self) -> float:
        return self.recognize_s + self.solve_s


def _instance(family: str, n: int, seed: int):
    if family == "chain":
        return chain_family(n)
    if family == "proper":
        return random_proper_interval(n, "1/2", seed)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _best_of(fn, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run_bench(family: str, sizes, repeats: int = 3, seed: int = 0) -> list[BenchRow]:
    """Best-of-``repeats`` wall time of recognition and of solving, per size.

    Instance construction is not timed. A tiny warm-up run loads the compiled
    kernels first.
    """
    solve_proper_interval(_instance(family, 16, seed))
    rows = []
    for n in sizes:
        g = _instance(family, int(n), seed)
        t_rec, chain = _best_of(lambda: recognize_proper_interval(g), repeats)
        if chain is None:
            raise RuntimeError(f"benchmark instance n={n} was not recognised")
        t_sol, (_, c) = _best_of(lambda: solve_proper_interval(g), repeats)
        rows.append(BenchRow(g.n, g.m, t_rec, t_sol, c))
    return rows


def growth_ratios(rows: list[BenchRow]) -> list[float]:
    """Observed time growth divided by size growth between successive rows."""
    return [(b.total_s / a.total_s) / (b.n / a.n) for a, b in zip(rows, rows[1:])]


def format_table(rows: list[BenchRow]) -> str:
    lines = [f"{'n':>10} {'m':>10} {'recognize_s':>12} {'solve_s':>10} {'total_s':>10} {'cost':>14}"]
    for r in rows:
        lines.append(
            f"{r.n:>10} {r.m:>10} {r.recognize_s:>12.6f} {r.solve_s:>10.6f} {r.total_s:>10.6f} {r.cost:>14}"
        )
    return "\n".join(lines)
