"""Command-line entry point: ``graphburn {burn,exact,verify,bound,gen,bench}``.

Exit codes: 0 ok, 1 parse/input error, 2 disconnected graph, 3 internal
condition violation, 4 exact search limit exceeded, 5 invalid schedule.
"""

from __future__ import annotations

import argparse
import sys

from .bench import rows_to_csv, run_bench
from .burnsim import STRICT, GREEDY, ScheduleError, dump_schedule, load_schedule, verify_schedule
from .decompose import AlgorithmError, burn_tree, burning_bound, reference_bounds
from .exact import BurningNumberExceeded, exact_burning_number
from .gen import FAMILIES, family_graph, gen_caterpillar, gen_spider
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    dump_edge_list,
    is_connected,
    load_edge_list,
    spanning_tree,
)

EXIT_PARSE = 1
EXIT_DISCONNECTED = 2
EXIT_INTERNAL = 3
EXIT_LIMIT = 4
EXIT_INVALID = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8", newline="") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from None


def _load_graph(path: str) -> Graph:
    try:
        return load_edge_list(_read(path))
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _load_connected(path: str) -> Graph:
    g = _load_graph(path)
    if not is_connected(g):
        raise CliError(f"{path}: graph is disconnected", EXIT_DISCONNECTED)
    return g


def _int_list(text: str) -> list[int]:
    """``"1,5,7"`` or ``"1..10"`` (inclusive) or a mix; empty string gives []."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_burn(args) -> int:
    g = _load_connected(args.file)
    if not 0 <= args.root < g.n:
        raise CliError(f"root {args.root} out of range", EXIT_PARSE)
    tree, _ = spanning_tree(g, args.root)
    try:
        k, decomposition, schedule = burn_tree(tree, args.root)
    except AlgorithmError as exc:
        raise CliError(f"internal condition violated: {exc}", EXIT_INTERNAL) from None
    check = verify_schedule(g, k, schedule)
    print(f"n={g.n}")
    print(f"k={k}")
    print(f"completion={check.completion}")
    print(f"valid: {str(check.valid).lower()}")
    if args.trace:
        sys.stdout.write(decomposition.trace())
    if args.schedule_out:
        try:
            with open(args.schedule_out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(dump_schedule(schedule))
        except OSError as exc:
            raise CliError(f"cannot write {args.schedule_out}: {exc}", EXIT_PARSE) from None
    return 0 if check.valid else EXIT_INTERNAL


def cmd_exact(args) -> int:
    g = _load_connected(args.file)
    if g.n > args.limit:
        raise CliError(f"n={g.n} exceeds the exact-search limit {args.limit} (raise with --limit)", EXIT_LIMIT)
    try:
        b, witness = exact_burning_number(g, args.max_k)
    except BurningNumberExceeded as exc:
        raise CliError(str(exc), EXIT_LIMIT) from None
    print(f"b={b}")
    sys.stdout.write(dump_schedule(witness))
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        schedule = load_schedule(_read(args.schedule))
        check = verify_schedule(g, args.k, schedule, STRICT if args.strict else GREEDY)
    except ScheduleError as exc:
        raise CliError(f"{args.schedule}: {exc}", EXIT_PARSE) from None
    print(check.report())
    return 0 if check.valid else EXIT_INVALID


def cmd_bound(args) -> int:
    if args.n < 1:
        raise CliError("n must be >= 1", EXIT_PARSE)
    ref = reference_bounds(args.n)
    print(f"n={args.n}")
    print(f"new={burning_bound(args.n)}")
    print(f"land_lu={ref['land_lu']}")
    print(f"ceil_sqrt={ref['ceil_sqrt']}")
    return 0


def cmd_gen(args) -> int:
    try:
        if args.legs is not None and args.family == "spider":
            g = gen_spider(_int_list(args.legs))
        elif args.legs is not None and args.family == "caterpillar":
            legs = _int_list(args.legs)
            g = gen_caterpillar(len(legs), legs)
        else:
            if args.n is None:
                raise CliError("n is required", EXIT_PARSE)
            g = family_graph(args.family, args.n, args.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    sys.stdout.write(dump_edge_list(g))
    return 0


def cmd_bench(args) -> int:
    try:
        sizes, seeds = _int_list(args.sizes), _int_list(args.seeds)
    except ValueError as exc:
        raise CliError(f"bad list: {exc}", EXIT_PARSE) from None
    text = rows_to_csv(run_bench(args.family, sizes, seeds))
    if args.csv in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.csv}: {exc}", EXIT_PARSE) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphburn", description="Constructive graph burning schedules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("burn", help="build and verify a schedule within the bound")
    p.add_argument("file", help="edge-list file ('-' for stdin)")
    p.add_argument("--root", type=int, default=0, help="spanning-tree root (default 0)")
    p.add_argument("--trace", action="store_true", help="print one line per extracted piece")
    p.add_argument("--schedule-out", help="write the schedule to this file")
    p.set_defaults(func=cmd_burn)

    p = sub.add_parser("exact", help="exact burning number by exhaustive search")
    p.add_argument("file")
    p.add_argument("--max-k", type=int, default=None, help="give up above this many rounds (default n)")
    p.add_argument("--limit", type=int, default=20, help="refuse graphs with more vertices (default 20)")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check that a schedule burns the graph by round k")
    p.add_argument("graph")
    p.add_argument("schedule")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="no substitution for burned or missing sources")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="print the new bound and the reference bounds for n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--legs", help="spider leg lengths / caterpillar leaves per spine vertex, comma-separated")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="CSV of bound compliance over a family")
    p.add_argument("--family", choices=FAMILIES, default="random-tree")
    p.add_argument("--sizes", default="", help="e.g. 100,1000")
    p.add_argument("--seeds", default="1", help="e.g. 1..10")
    p.add_argument("--csv", help="output path (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"graphburn: {exc}", file=sys.stderr)
        return exc.code
    except DisconnectedGraphError as exc:
        print(f"graphburn: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED


if __name__ == "__main__":
    sys.exit(main())
