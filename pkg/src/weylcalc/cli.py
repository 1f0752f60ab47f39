"""Command-line front end.

Exit codes: 0 pass, 1 usage or parse error, 2 an asserted identity failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .algebra import expr_to_nf, nf_substitute_c
from .exact import I, GaussianRational
from .expr import ParseError, parse, render
from .free import MAX_CUTOFF, bch_anti_comparison, bch_linear_oracle, bch_z1_anticommutator_form, bch_z1_commutator_form
from .identities import v_system_solve
from .special import bernoulli_table, euler_zero
from .suites import IDENTITY_NAMES, SUITES, VerificationRun, report_json, run_suites, series_to_obj

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2
# depth D needs words of length D + 1
MAX_DEPTH = MAX_CUTOFF - 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _frac(q) -> str:
    if isinstance(q, GaussianRational):
        return str(q)
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_normal_order(args) -> int:
    try:
        A = expr_to_nf(parse(args.expr))
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        print(f"  {args.expr}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.c_value == "1":
        A = nf_substitute_c(A, 1)
    elif args.c_value == "i":
        A = nf_substitute_c(A, I)
    print(render(A, args.format))
    return EXIT_OK


def _print_summary(run: VerificationRun) -> None:
    for s in run.suites:
        kind = "asserted" if s.asserted else "diagnostic"
        status = "PASS" if s.ok else ("FAIL" if s.asserted else "MISMATCH")
        bound = f"free-cutoff={s.bound}" if SUITES[s.name].uses_free_cutoff else f"max={s.bound}"
        print(f"{status:8s} {s.name:24s} {kind:10s} {bound:14s} cases={len(s.cases)} failures={len(s.failures)}")
        if s.failures:
            print(f"         first failing params: {list(s.failures[0].params)}")
    print(f"asserted suites: {run.passed} passed, {run.failed} failed")
    if any(s.name.startswith("moment") for s in run.suites):
        print("note: moment-bracket compares both sides with the hbar and overall i/hbar prefactors stripped")


def _finish(run: VerificationRun, report: str | None) -> int:
    _print_summary(run)
    print(f"wall time: {run.wall_time:.2f} s", file=sys.stderr)
    if report:
        with open(report, "w", encoding="utf-8") as fh:
            fh.write(report_json(run))
    return EXIT_OK if run.ok else EXIT_FAIL


def cmd_identity(args) -> int:
    if args.name not in SUITES:
        print(f"unknown identity {args.name!r}; choose from: {', '.join(IDENTITY_NAMES)}", file=sys.stderr)
        return EXIT_USAGE
    if args.max < 0:
        print("--max must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    suite = SUITES[args.name]
    if suite.uses_free_cutoff and args.max > MAX_DEPTH:
        print(f"--max for free-algebra suites must be <= {MAX_DEPTH}", file=sys.stderr)
        return EXIT_USAGE
    run = run_suites([args.name], max_degree=args.max, free_cutoff=args.max, jobs=args.jobs)
    if suite.name == "bch-z1-anti-diagnostic" and args.max >= 1:
        comparison = bch_anti_comparison(args.max)
        print(f"literal anti-commutator form matches the oracle: {comparison['match']}")
    return _finish(run, args.report)


def cmd_verify_all(args) -> int:
    if args.max_degree < 0 or not 1 <= args.free_cutoff <= MAX_DEPTH:
        print(f"--max-degree must be >= 0 and --free-cutoff between 1 and {MAX_DEPTH}", file=sys.stderr)
        return EXIT_USAGE
    run = run_suites(IDENTITY_NAMES, args.max_degree, args.free_cutoff, jobs=args.jobs)
    return _finish(run, args.report)


def table_values(kind: str, n: int) -> list[str]:
    if kind == "bernoulli":
        return [_frac(b) for b in bernoulli_table(n)]
    if kind == "euler-zero":
        return [_frac(euler_zero(k)) for k in range(1, n + 1)]
    if kind == "v":
        return [_frac(v) for v in v_system_solve(n).solution] if n else []
    raise ValueError(kind)


def cmd_tables(args) -> int:
    if args.n < 0 or (args.kind == "v" and args.n < 1):
        print("N must be >= 0 (>= 1 for v)", file=sys.stderr)
        return EXIT_USAGE
    values = table_values(args.kind, args.n)
    if args.format == "json":
        start = 0 if args.kind == "bernoulli" else 1
        print(json.dumps({"kind": args.kind, "start": start, "values": values}))
    else:
        print("\n".join(values))
    return EXIT_OK


def cmd_bch(args) -> int:
    d = args.cutoff
    if not 1 <= d <= MAX_DEPTH:
        print(f"cutoff must be between 1 and {MAX_DEPTH}", file=sys.stderr)
        return EXIT_USAGE
    comm = bch_z1_commutator_form(d)
    oracle = bch_linear_oracle(d)
    anti = bch_z1_anticommutator_form(d)
    comparison = bch_anti_comparison(d)
    if args.format == "json":
        out = {
            "depth": d,
            "commutator_form": series_to_obj(comm),
            "anticommutator_form": series_to_obj(anti),
            "oracle": series_to_obj(oracle),
            "commutator_form_matches": comm == oracle,
            "anticommutator_diagnostic": comparison,
        }
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"Z1 through {d} nested brackets (words up to length {d + 1})")
    print(f"oracle, linear-in-Y part of log(e^X e^Y):\n  {oracle}")
    print(f"nested-commutator form:\n  {comm}")
    print(f"nested-commutator form matches oracle: {comm == oracle}")
    print(f"literal anti-commutator form (diagnostic):\n  {anti}")
    print(f"literal anti-commutator form matches oracle: {comparison['match']}")
    for row in comparison["by_degree"]:
        mark = "ok" if row["match"] else "differs"
        print(f"  degree {row['degree']}: {mark}")
        if not row["match"]:
            print(f"    difference: {row['difference']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weylcalc", description="Exact Weyl-algebra normal ordering and identity verification.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    n = sub.add_parser("normal-order", help="normal-order an expression (Y left of X)")
    n.add_argument("expr")
    n.add_argument("--c-value", choices=["symbolic", "1", "i"], default="symbolic")
    n.add_argument("--format", choices=["text", "latex", "json"], default="text")
    n.set_defaults(func=cmd_normal_order)

    i = sub.add_parser("identity", help="sweep one identity suite")
    i.add_argument("name", help=", ".join(IDENTITY_NAMES))
    i.add_argument("--max", type=int, default=6)
    i.add_argument("--report")
    i.add_argument("--jobs", type=int, default=1)
    i.set_defaults(func=cmd_identity)

    t = sub.add_parser("tables", help="exact special-number tables")
    t.add_argument("kind", choices=["bernoulli", "euler-zero", "v"])
    t.add_argument("n", type=int)
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify-all", help="run every suite")
    v.add_argument("--max-degree", type=int, default=6)
    v.add_argument("--free-cutoff", type=int, default=6)
    v.add_argument("--report")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify_all)

    b = sub.add_parser("bch", help="linear-in-Y BCH forms and the diagnostic comparison")
    b.add_argument("cutoff", type=int)
    b.add_argument("--format", choices=["text", "json"], default="text")
    b.set_defaults(func=cmd_bch)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("--jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
