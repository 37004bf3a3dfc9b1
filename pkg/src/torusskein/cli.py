"""Command-line front end.

Exit codes: 0 success, 1 computation error, 2 parse error, 3 self-test failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .algebra import T_to_simple
from .errors import ParseError, SkeinError
from .formatting import (certificate_to_json, dumps, element_to_json, format_certificate,
                         format_element, format_scalar, format_simple, format_witness,
                         simple_to_json, witness_to_json)
from .parser import evaluate_text
from .quotient import ParityClass, commutator_witness, reduce_mod_commutators, trace
from .scalars import EXACT, Mode, ScalarContext
from .selftest import RunConfig, run_selftest

EXIT_OK, EXIT_COMPUTE, EXIT_PARSE, EXIT_SELFTEST = 0, 1, 2, 3


def _parse_t(text: str) -> complex:
    try:
        re_s, im_s = text.split(",")
        return complex(float(re_s), float(im_s))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=[m.value for m in Mode], default="exact")
    common.add_argument("--t", type=_parse_t, default=None, metavar="RE,IM",
                        help="value of t (required in numeric mode)")
    common.add_argument("--json", action="store_true", help="single-line JSON output")

    parser = argparse.ArgumentParser(
        prog="torusskein",
        description="Exact computations in the Kauffman bracket skein algebra of the torus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression in the T-basis")
    p.add_argument("expr")

    p = sub.add_parser("trace", parents=[common], help="one of the five traces")
    p.add_argument("cls", choices=[c.value for c in ParityClass], metavar="class")
    p.add_argument("expr")

    p = sub.add_parser("witness", parents=[common],
                       help="commutator witness for (x,y)_T - (z,w)_T")
    for name in ("x", "y", "z", "w"):
        p.add_argument(name, type=int)

    p = sub.add_parser("reduce", parents=[common], help="certified reduction modulo commutators")
    p.add_argument("expr")

    p = sub.add_parser("convert", parents=[common], help="rewrite in the T or simple basis")
    p.add_argument("expr")
    p.add_argument("--to", choices=["T", "simple"], default="T")

    p = sub.add_parser("selftest", parents=[common], help="seeded randomized invariant checks")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-index", type=int, default=8)
    return parser


def _context(args) -> ScalarContext:
    if args.mode == "numeric":
        if args.t is None:
            raise SystemExit("error: --t is required in numeric mode")
        return ScalarContext.numeric(args.t)
    if args.t is not None:
        raise SystemExit("error: --t only applies to numeric mode")
    return EXACT


def run(args) -> int:
    if args.command == "selftest":
        try:
            cfg = RunConfig(mode=Mode(args.mode), t=args.t, output="json" if args.json else "text",
                            seed=args.seed, case_count=args.cases, max_index=args.max_index)
        except ValueError as exc:
            raise SystemExit(f"error: {exc}")
        report = run_selftest(cfg)
        print(dumps(report.to_json()) if args.json else report.to_text())
        return EXIT_OK if report.ok else EXIT_SELFTEST

    ctx = _context(args)
    if args.command == "eval":
        e = evaluate_text(args.expr, ctx)
        print(dumps(element_to_json(e)) if args.json else format_element(e))
    elif args.command == "trace":
        value = trace(evaluate_text(args.expr, ctx), args.cls)
        print(dumps({"class": args.cls, "value": value.to_json()}) if args.json
              else format_scalar(value))
    elif args.command == "witness":
        w = commutator_witness(args.x, args.y, args.z, args.w, ctx)
        print(dumps(witness_to_json(w)) if args.json else format_witness(w))
    elif args.command == "reduce":
        cert = reduce_mod_commutators(evaluate_text(args.expr, ctx))
        print(dumps(certificate_to_json(cert)) if args.json else format_certificate(cert))
    elif args.command == "convert":
        e = evaluate_text(args.expr, ctx)
        if args.to == "simple":
            s = T_to_simple(e)
            print(dumps(simple_to_json(s)) if args.json else format_simple(s))
        else:
            print(dumps(element_to_json(e)) if args.json else format_element(e))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SkeinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
