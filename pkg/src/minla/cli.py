"""Command-line front end.

Exit codes: 0 success, 1 not a proper interval graph (``recognize``,
``solve``) or no counterexample found, 2 malformed input, 3 instance too large
for the exhaustive oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bench, io
from .errors import InvalidArrangement, InvalidGraph, MalformedInterval, ParseError, RangeOutOfBounds, TooLarge
from .generators import generate_chain_graph, random_intervals, random_proper_interval
from .graph import cost
from .intervals import approximate, graph_from_intervals
from .oracle import brute_force_minla, default_threads, enumerate_optimal, find_pi_suboptimal
from .recognition import recognize_proper_interval
from .solver import solve_proper_interval

EXIT_OK = 0
EXIT_NOT_PROPER = 1
EXIT_MALFORMED = 2
EXIT_TOO_LARGE = 3

NOT_PROPER = "NOT_PROPER_INTERVAL"


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _ranges(text: str) -> list[tuple[int, int]]:
    out = []
    for part in text.replace(";", ",").split(","):
        part = part.strip()
        if not part:
            continue
        a, sep, b = part.partition("-")
        if not sep:
            raise ParseError(f"range {part!r} is not of the form a-b")
        try:
            out.append((int(a), int(b)))
        except ValueError:
            raise ParseError(f"range {part!r} is not of the form a-b") from None
    return out


def cmd_gen(args) -> int:
    if args.kind == "chain":
        g = generate_chain_graph(args.n, _ranges(args.ranges or ""))
        _emit(io.format_edge_list(g, [f"chain ranges={args.ranges or ''}"]), args.output)
    elif args.kind == "proper":
        g = random_proper_interval(args.n, Fraction(args.density), args.seed)
        _emit(io.format_edge_list(g, [f"seed={args.seed}", f"density={args.density}"]), args.output)
    else:
        iv = random_intervals(args.n, args.span, args.seed)
        _emit(io.format_intervals(iv, [f"seed={args.seed}", f"span={args.span}"]), args.output)
    return EXIT_OK


def cmd_recognize(args) -> int:
    g = io.parse_graph(io.read_text(args.file))
    chain = recognize_proper_interval(g)
    if chain is None:
        print(NOT_PROPER)
        return EXIT_NOT_PROPER
    lines = ["PROPER_INTERVAL", "order " + " ".join(map(str, chain.order.tolist()))]
    lines.extend(f"clique {lo} {hi}" for lo, hi in chain.ranges.tolist())
    print("\n".join(lines))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = io.parse_graph(io.read_text(args.file))
    result = solve_proper_interval(g)
    if result is None:
        print(NOT_PROPER)
        return EXIT_NOT_PROPER
    a, c = result
    if args.arrangement:
        Path(args.arrangement).write_text(io.format_arrangement(a))
    print(f"cost {c}")
    return EXIT_OK


def _report_fields(g, report) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "cost": report.cost,
        "lower_bound_A": io.format_rational(report.lower_bound_A),
        "upper_bound_B": report.upper_bound_B,
        "ratio": None if report.ratio_certificate is None else io.format_rational(report.ratio_certificate),
    }


def cmd_approx(args) -> int:
    iv = io.parse_intervals(io.read_text(args.file))
    a, report = approximate(iv)
    fields = _report_fields(graph_from_intervals(iv), report)
    if args.arrangement:
        Path(args.arrangement).write_text(io.format_arrangement(a))
    if args.report == "json":
        print(json.dumps(fields))
    else:
        print("\n".join(f"{k} {'none' if v is None else v}" for k, v in fields.items()))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = io.parse_graph(io.read_text(args.file))
    threads = args.threads or default_threads()
    if args.all_optima:
        optima = enumerate_optimal(g, args.limit_n or 8, threads=threads)
        best = cost(g, optima[0])
        lines = [f"cost {best}", f"optima {len(optima)}"]
        lines.extend("order " + " ".join(map(str, a.order.tolist())) for a in optima)
    else:
        a, best = brute_force_minla(g, args.limit_n or 10, threads=threads)
        lines = [f"cost {best}", "order " + " ".join(map(str, a.order.tolist()))]
    print("\n".join(lines))
    return EXIT_OK


def cmd_check(args) -> int:
    g = io.parse_graph(io.read_text(args.file))
    a = io.parse_arrangement(io.read_text(args.arrangement), g.n)
    print(f"cost {cost(g, a)}")
    return EXIT_OK


def cmd_find_counterexample(args) -> int:
    found = find_pi_suboptimal(args.max_n, args.seed, args.trials, family=args.family)
    if found is None:
        print(f"NOT_FOUND seed={args.seed} trials={args.trials}")
        return EXIT_NOT_PROPER
    comments = [
        f"seed={found.seed if found.seed is not None else 'none'}",
        f"family={found.family} max_n={found.max_n}",
        f"pi_cost={found.pi_cost} optimum={found.optimum}",
    ]
    _emit(io.format_intervals(found.intervals, comments), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(float(s)) for s in args.sizes.split(",") if s.strip()]
    rows = bench.run_bench(args.family, sizes, repeats=args.repeats)
    print(bench.format_table(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minla", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="emit an instance")
    s.add_argument("kind", choices=["chain", "proper", "intervals"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ranges", help="chain cliques, e.g. 1-3,3-4")
    s.add_argument("--density", default="1/2", help="proper: extension probability (p/q)")
    s.add_argument("--span", type=int, default=20, help="intervals: endpoint range")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("recognize", help="print the clique chain or NOT_PROPER_INTERVAL")
    s.add_argument("file")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("solve", help="exact MinLA of a proper interval graph")
    s.add_argument("file")
    s.add_argument("--arrangement", metavar="OUT")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("approx", help="start-ordered layout with bound certificate")
    s.add_argument("file")
    s.add_argument("--report", choices=["text", "json"], default="text")
    s.add_argument("--arrangement", metavar="OUT")
    s.set_defaults(func=cmd_approx)

    s = sub.add_parser("oracle", help="exhaustive MinLA")
    s.add_argument("file")
    s.add_argument("--all-optima", action="store_true")
    s.add_argument("--limit-n", type=int)
    s.add_argument("--threads", type=int, help="default: $MINLA_THREADS or 1")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("check", help="validate an arrangement and print its cost")
    s.add_argument("file")
    s.add_argument("arrangement")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("find-counterexample", help="search for a suboptimal start order")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--family", choices=["random", "proper"], default="random")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_find_counterexample)

    s = sub.add_parser("bench", help="time recognition and solving")
    s.add_argument("--family", choices=list(bench.FAMILIES), default="chain")
    s.add_argument("--sizes", default="1e3,1e4,1e5,1e6")
    s.add_argument("--repeats", type=int, default=3)
    s.set_defaults(func=cmd_bench)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (ParseError, InvalidGraph, InvalidArrangement, MalformedInterval, RangeOutOfBounds, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run())
