"""Text formats.

Edge list::

    c optional comments
    p <n> <m>
    e <u> <v>        # m lines, 1 <= u < v <= n

Intervals::

    intervals <n>
    <start> <end>    # n lines; integers, decimals or p/q rationals

Arrangement::

    <vertex> <position>   # n lines
"""

from __future__ import annotations

import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from .errors import InvalidArrangement, InvalidGraph, MalformedInterval, ParseError
from .graph import Arrangement, Graph
from .intervals import IntervalSet, graph_from_intervals

_NUMBER = re.compile(r"^[+-]?\d+(\.\d+)?$|^[+-]?\d+/\d+$")


def read_text(path: str | Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c" or tokens[0].startswith("#"):
            continue
        yield lineno, tokens


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    records = _records(text)
    header = next(records, None)
    if header is None:
        raise ParseError("empty edge list")
    lineno, tok = header
    if tok[0] != "p" or len(tok) not in (3, 4):
        raise ParseError("expected header 'p <n> <m>'", lineno)
    n, m = _int(tok[-2], lineno), _int(tok[-1], lineno)
    if n < 0 or m < 0:
        raise ParseError("negative size in header", lineno)
    edges = []
    seen = set()
    for lineno, tok in records:
        if tok[0] != "e" or len(tok) != 3:
            raise ParseError("expected 'e <u> <v>'", lineno)
        u, v = _int(tok[1], lineno), _int(tok[2], lineno)
        if not 1 <= u < v <= n:
            raise ParseError(f"edge ({u}, {v}) violates 1 <= u < v <= {n}", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except InvalidGraph as exc:
        raise ParseError(str(exc)) from exc


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edge_array().tolist())
    return "\n".join(lines) + "\n"


def _rational(token: str, lineno: int) -> Fraction:
    if not _NUMBER.match(token):
        raise ParseError(f"not a rational number: {token!r}", lineno)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", lineno) from None


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_intervals(text: str) -> IntervalSet:
    records = _records(text)
    header = next(records, None)
    if header is None:
        raise ParseError("empty interval file")
    lineno, tok = header
    if tok[0] != "intervals" or len(tok) != 2:
        raise ParseError("expected header 'intervals <n>'", lineno)
    n = _int(tok[1], lineno)
    pairs = []
    for lineno, tok in records:
        if len(tok) != 2:
            raise ParseError("expected '<start> <end>'", lineno)
        pairs.append((_rational(tok[0], lineno), _rational(tok[1], lineno)))
    if len(pairs) != n:
        raise ParseError(f"header announces {n} intervals, found {len(pairs)}")
    try:
        return IntervalSet(pairs)
    except MalformedInterval as exc:
        raise ParseError(str(exc)) from exc


def format_intervals(iv: IntervalSet, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"intervals {iv.n}")
    lines.extend(f"{format_rational(a)} {format_rational(b)}" for a, b in iv.intervals)
    return "\n".join(lines) + "\n"


def parse_arrangement(text: str, n: int | None = None) -> Arrangement:
    mapping: dict[int, int] = {}
    for lineno, tok in _records(text):
        if len(tok) != 2:
            raise ParseError("expected '<vertex> <position>'", lineno)
        v, p = _int(tok[0], lineno), _int(tok[1], lineno)
        if v in mapping:
            raise ParseError(f"vertex {v} listed twice", lineno)
        mapping[v] = p
    try:
        return Arrangement.from_mapping(mapping, n)
    except InvalidArrangement as exc:
        raise ParseError(str(exc)) from exc


def format_arrangement(a: Arrangement) -> str:
    return "".join(f"{v} {p}\n" for v, p in enumerate(a.positions.tolist(), start=1))


def parse_graph(text: str) -> Graph:
    """Parse either an edge list or an interval file (by header)."""
    for _, tok in _records(text):
        if tok[0] == "intervals":
            return graph_from_intervals(parse_intervals(text))
        break
    return parse_edge_list(text)
