"""Command-line interface: a thin wrapper over the core package.

Exit codes: 0 success, 1 usage error, 2 constraint violation, 3 selftest
failure. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .cycles import generate_down, generate_up, list_necklaces
from .decode import rank_down, rank_up, unrank_down, unrank_up
from .formats import format_set, format_symbols, parse_set, parse_symbols
from .selftest import run_grid
from .subsets import (
    diff_to_multiset,
    diff_to_subset,
    multiset_rank,
    multiset_to_diff,
    multiset_unrank,
    subset_rank,
    subset_to_diff,
    subset_unrank,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_cycle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--k", type=int, required=True, help="alphabet size")
    p.add_argument("--wmin", type=int, help="lower weight bound")
    p.add_argument("--wmax", type=int, help="upper weight bound")


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("digits", "dotted", "json"),
        default="auto",
        help="symbol rendering (default: digits for k<=9, dotted above)",
    )


def _check_bounds(args) -> None:
    if args.wmin is not None and args.wmax is not None:
        raise _UsageError("supply at most one of --wmin and --wmax")


def cmd_generate(args) -> int:
    _check_bounds(args)
    if args.wmax is not None:
        stream = generate_down(args.n, args.k, args.wmax)
    else:
        stream = generate_up(args.n, args.k, args.wmin or 0)
    print(format_symbols(stream, args.k, args.format))
    return 0


def cmd_rank(args) -> int:
    _check_bounds(args)
    s = parse_symbols(args.string)
    if args.wmax is not None:
        r = rank_down(s, args.n, args.k, args.wmax)
    else:
        r = rank_up(s, args.n, args.k, args.wmin or 0)
    print(r)
    return 0


def cmd_unrank(args) -> int:
    _check_bounds(args)
    if args.wmax is not None:
        s = unrank_down(args.rank, args.n, args.k, args.wmax)
    else:
        s = unrank_up(args.rank, args.n, args.k, args.wmin or 0)
    print(format_symbols(s, args.k, args.format))
    return 0


def cmd_necklaces(args) -> int:
    for nu in list_necklaces(args.n, args.k, args.wmin or 0):
        print(format_symbols(nu, args.k, args.format))
    return 0


def _set_command(args, kind: str) -> int:
    if kind == "subset":
        enc, dec, do_rank, do_unrank = (
            subset_to_diff,
            diff_to_subset,
            subset_rank,
            subset_unrank,
        )
        diff_k = args.n - args.t + 1
    else:
        enc, dec, do_rank, do_unrank = (
            multiset_to_diff,
            diff_to_multiset,
            multiset_rank,
            multiset_unrank,
        )
        diff_k = args.n
    if args.verb in ("rank", "encode", "decode") and args.string is None:
        raise _UsageError(f"{kind} {args.verb} requires --string")
    if args.verb == "unrank" and args.rank is None:
        raise _UsageError(f"{kind} unrank requires --rank")
    if args.verb == "rank":
        print(do_rank(parse_set(args.string), args.n, args.t))
    elif args.verb == "unrank":
        print(format_set(do_unrank(args.rank, args.n, args.t), args.format))
    elif args.verb == "encode":
        print(format_symbols(enc(parse_set(args.string), args.n, args.t), diff_k, args.format))
    else:  # decode
        print(format_set(dec(parse_symbols(args.string), args.n, args.t), args.format))
    return 0


def cmd_selftest(args) -> int:
    progress = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
    report = run_grid(nmax=args.nmax, kmax=args.kmax, progress=progress)
    for line in report.failures[:50]:
        print(f"FAIL {line}", file=sys.stderr)
    print(f"cells checked: {report.cells}, failures: {len(report.failures)}")
    return 0 if report.ok else 3


def build_parser() -> _Parser:
    parser = _Parser(prog="ucycle", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("generate", help="print one full cycle")
    _add_cycle_args(p)
    _add_format_arg(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("rank", help="position of a window in the cycle")
    _add_cycle_args(p)
    p.add_argument("--string", required=True, help="window to look up")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", help="window at a given position")
    _add_cycle_args(p)
    p.add_argument("--rank", type=int, required=True)
    _add_format_arg(p)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("necklaces", help="list the filtered necklace order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--wmin", type=int)
    _add_format_arg(p)
    p.set_defaults(func=cmd_necklaces)

    for kind in ("subset", "multiset"):
        p = sub.add_parser(kind, help=f"{kind} cycle operations")
        p.add_argument("verb", choices=("rank", "unrank", "encode", "decode"))
        p.add_argument("--n", type=int, required=True, help="ground-set size")
        p.add_argument("--t", type=int, required=True, help="elements per set")
        p.add_argument("--string", help="set or difference string, per verb")
        p.add_argument("--rank", type=int)
        _add_format_arg(p)
        p.set_defaults(func=lambda args, kind=kind: _set_command(args, kind))

    p = sub.add_parser("selftest", help="run the exhaustive oracle grid")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
