"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 counterexample found, 3 budget
exceeded (or a capped search that could not decide).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .aggraph import build
from .factoring import Factorization, Signature, factor
from .harness import SweepConfig, run_sweep, write_csv
from .holes import BudgetExceeded
from .invariants import compute_invariants
from .theorem import NotImperfectError, classify, decide, lemma_witness

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _source(args) -> Factorization | Signature:
    if getattr(args, "signature", None):
        if args.n is not None:
            raise UsageError("give either n or --signature, not both")
        try:
            return Signature.parse(args.signature)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.n is None:
        raise UsageError("an integer n or --signature is required")
    try:
        return factor(int(args.n))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_check(args) -> int:
    src = _source(args)
    deadline = time.monotonic() + args.budget
    if args.method == "theorem":
        verdict, g = decide(src, "theorem")
        _emit(verdict.to_dict(g))
        return EXIT_OK
    try:
        verdict, g = decide(src, "spgt", max_length=args.max_hole_length, deadline=deadline)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(verdict.to_dict(g))
    if verdict.perfect is None:
        return EXIT_BUDGET
    if verdict.perfect != verdict.form.perfect:
        print(
            f"counterexample: closed form says perfect={verdict.form.perfect}, "
            f"search says perfect={verdict.perfect}",
            file=sys.stderr,
        )
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_witness(args) -> int:
    src = _source(args)
    g = build(src)
    try:
        w = lemma_witness(src, g)
    except NotImperfectError as exc:
        raise UsageError(str(exc)) from None
    out = {"n": g.n} if g.n is not None else {}
    out.update(signature=list(g.signature.exponents), form=str(classify(g.signature)))
    out["witness"] = w.to_dict(g)
    _emit(out)
    return EXIT_OK


def cmd_scan(args) -> int:
    try:
        config = SweepConfig(
            args.max_primes,
            args.max_exponent,
            args.max_vertices,
            check_invariants=args.invariants,
            budget_s=args.budget,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = run_sweep(config)
    write_csv(rows, sys.stdout, timing=not args.no_timing)
    if any(r.agree is False for r in rows):
        return EXIT_COUNTEREXAMPLE
    if any(r.skipped for r in rows):
        return EXIT_BUDGET
    if args.invariants and any(r.omega != r.chi for r in rows):
        print("warning: omega != chi on some row", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_export(args) -> int:
    g = build(_source(args))
    sys.stdout.write(g.to_dot() if args.format == "dot" else g.to_json(indent=2) + "\n")
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = build(_source(args))
    try:
        report = compute_invariants(g, deadline=time.monotonic() + args.budget)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(report.to_dict(g))
    return EXIT_OK


def _add_target(p: argparse.ArgumentParser) -> None:
    p.add_argument("n", nargs="?", help="decimal integer n >= 2, below 2**64")
    p.add_argument("--signature", metavar="LIST", help='exponent list such as "2,1,1"')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="agperfect", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="perfectness verdict for one n or signature")
    _add_target(p)
    p.add_argument("--method", choices=("spgt", "theorem"), default="spgt")
    p.add_argument("--max-hole-length", type=int, default=None)
    p.add_argument("--budget", type=float, default=60.0, help="seconds (default 60)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", help="explicit induced 5-cycle for an imperfect n")
    _add_target(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("scan", help="signature sweep as CSV on stdout")
    p.add_argument("--max-primes", type=int, required=True)
    p.add_argument("--max-exponent", type=int, required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--invariants", action="store_true", help="also compute omega and chi")
    p.add_argument("--budget", type=float, default=60.0, help="per-signature seconds")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="leave elapsed_ms blank")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("export", help="write the graph as DOT or JSON")
    fmt = p.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", dest="format", action="store_const", const="dot")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    _add_target(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("invariants", help="clique and chromatic number with certificates")
    _add_target(p)
    p.add_argument("--budget", type=float, default=60.0)
    p.set_defaults(func=cmd_invariants)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"agperfect: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
