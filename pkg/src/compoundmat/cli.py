"""Command-line entry point.

Exit codes: 0 success, 1 a verified property failed, 2 bad input
(parse error, unknown option), 3 dimension or range error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import records_to_csv, run_bench
from .compounds import adjugate_compound, compound
from .errors import CompoundMatError, ParseError
from .exact_core import format_rational, parse_rational
from .homlab import diagonal_preimage
from .kernel import kernel
from .laplace import STRATEGY_KINDS, DetStrategy, determinant
from .matrix_io import format_matrix, read_matrix
from .suites import SUITES, exit_code, run_suite

EXIT_FAILED, EXIT_PARSE, EXIT_DIMENSION = 1, 2, 3


def _int_list(text: str) -> list[int]:
    """``"4,5,6"`` or ``"4..6"``."""
    out = []
    for part in text.split(","):
        lo, sep, hi = part.partition("..")
        try:
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None
    return out


def cmd_det(args) -> int:
    a, _ = read_matrix(args.file)
    print(format_rational(determinant(a, DetStrategy.parse(args.strategy))))
    return 0


def cmd_compound(args) -> int:
    a, fmt = read_matrix(args.file)
    build = adjugate_compound if args.adjugate else compound
    sys.stdout.write(format_matrix(build(a, args.p).body, fmt))
    return 0


def cmd_kernel(args) -> int:
    a, _ = read_matrix(args.file)
    res = kernel(a)
    print(f"corank {res.corank}")
    print(f"source {res.source_label}")
    for v in res.basis:
        print(", ".join(format_rational(x) for x in v.col(1)))
    return 0


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.seed, args.trials)
    for r in reports:
        print(json.dumps(r.to_dict()) if args.json else r.to_text())
    return exit_code(reports)


def cmd_bench(args) -> int:
    records = run_bench(args.sizes, args.strategies.split(","), args.seed, args.trials)
    sys.stdout.write(records_to_csv(records))
    return 0


def cmd_preimage_diag(args) -> int:
    mu = [parse_rational(x) for x in args.mu]
    res = diagonal_preimage(mu)
    for name, ok in res.conditions.items():
        print(f"{name}: {'holds' if ok else 'fails'}")
    print(res.message)
    if res.matrix is not None:
        print("a = diag(" + ", ".join(format_rational(res.matrix[i, i]) for i in range(1, 5)) + ")")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compoundmat", description="Exact compound matrices, Laplace expansions and kernels."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="exact determinant")
    p.add_argument("--strategy", default="bareiss",
                   help=f"one of {', '.join(STRATEGY_KINDS)}, optionally with rows, e.g. pair-rows:1,2")
    p.add_argument("file")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("compound", help="p-th compound or its adjugate compound")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--adjugate", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_compound)

    p = sub.add_parser("kernel", help="kernel basis from cofactor data")
    p.add_argument("file")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--json", action="store_true", help="one JSON object per report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="benchmark determinant strategies (CSV)")
    p.add_argument("--sizes", type=_int_list, default=_int_list("2..6"))
    p.add_argument("--strategies", default="bareiss,pair-rows")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("preimage-diag", help="diagonal preimage of diag(mu) under m_2 (n = 4)")
    p.add_argument("mu", nargs=6)
    p.set_defaults(func=cmd_preimage_diag)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CompoundMatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION


if __name__ == "__main__":
    sys.exit(main())
