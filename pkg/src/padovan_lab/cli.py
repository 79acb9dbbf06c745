"""Command-line entry point: ``padovan-lab {sequence,generate,verify,report}``.

Exit status is 0 on success, 1 when a verification check fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .closed_forms import FamilyParams, padovan_number
from .errors import PadovanLabError
from .export import FORMATS
from .graph_core import FAMILIES, build_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_VERTICES_ENV = "PADOVAN_LAB_MAX_VERTICES"


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def resolve_params(n, k, p, q) -> FamilyParams:
    """Accept (n, k), (p, q) or both (if they agree)."""
    have_nk = n is not None and k is not None
    have_pq = p is not None and q is not None
    if (n is None) != (k is None) or (p is None) != (q is None) or not (have_nk or have_pq):
        raise PadovanLabError("give both -n and -k, or both -p and -q")
    if have_nk:
        if n < 1:
            raise PadovanLabError(f"n must be at least 1, got {n}")
        params = FamilyParams.from_nk(n, k, strict=False)
        if have_pq and (params.p, params.q) != (p, q):
            raise PadovanLabError(f"(n={n}, k={k}) corresponds to p={params.p}, q={params.q}, not p={p}, q={q}")
        return params
    return FamilyParams.from_pq(p, q)


def cmd_sequence(args) -> int:
    for n in range(args.max + 1):
        print(f"{n}: {padovan_number(n)}")
    return EXIT_OK


def cmd_generate(args) -> int:
    params = resolve_params(args.n, args.k, args.p, args.q)
    if not params.valid:
        print(f"warning: {args.family} family for n={params.n} k={params.k} is empty", file=sys.stderr)
    g = build_graph(args.family, params)
    sys.stdout.write(FORMATS[args.format](g))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    previous = os.environ.get(MAX_VERTICES_ENV)
    if args.max_vertices is not None:
        os.environ[MAX_VERTICES_ENV] = str(args.max_vertices)
    try:
        report = run_suite(args.suite, max_n=args.max_n, max_pq=args.max_pq)
    finally:
        if previous is None:
            os.environ.pop(MAX_VERTICES_ENV, None)
        else:
            os.environ[MAX_VERTICES_ENV] = previous
    for check in report.checks:
        print(check.line())
    print(report.summary())
    # timing goes to stderr so stdout stays byte-identical across runs
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_report(args) -> int:
    from .report import format_table, report_rows

    rows = report_rows(args.n)
    sys.stdout.write(format_table(rows))
    if args.figures:
        from .plotting import render_report_figures

        for path in render_report_figures(rows, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITES

    parser = argparse.ArgumentParser(
        prog="padovan-lab",
        description="Weighted Padovan graphs, their word and partition models, and checks of their closed forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("sequence", help="print Padovan numbers P_0..P_N")
    seq.add_argument("--max", type=_nonnegative, default=20, metavar="N")
    seq.set_defaults(func=cmd_sequence)

    gen = sub.add_parser("generate", help="write one family graph to standard output")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("-n", "--n", type=int)
    gen.add_argument("-k", "--k", type=int)
    gen.add_argument("-p", "--p", type=int)
    gen.add_argument("-q", "--q", type=int)
    gen.add_argument("--format", choices=sorted(FORMATS), default="json")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="check closed forms against brute force")
    ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ver.add_argument("--max-n", type=_positive, default=14)
    ver.add_argument("--max-pq", type=_nonnegative, default=4)
    ver.add_argument("--max-vertices", type=_positive, default=None,
                     help="vertex bound for brute-force median, cube and automorphism searches")
    ver.set_defaults(func=cmd_verify)

    rep = sub.add_parser("report", help="tabulate every Phi^n_k for n <= N")
    rep.add_argument("--n", type=_positive, default=10, metavar="N")
    rep.add_argument("--figures", metavar="DIR", help="also render PNG figures into DIR")
    rep.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PadovanLabError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
