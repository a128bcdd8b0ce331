"""Batch command-line front end.

Subcommands: table, eval, verify, torsion, hopf, xi, search.  Results go to
stdout, diagnostics to stderr; exit code 0 on success, 1 when a verification
suite fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .octonion import E, Octonion, oct_mul
from .deformed import x_product, xi_set
from .torsion import hopf, torsion
from .verifier import (SEARCH_IDENTITIES, SUITES, SuiteConfig, run_suite,
                       search_counterexamples)
from .exprs import (EvalError, ParseError, eval_text, format_multivector,
                    format_octonion, format_real)


def _fail_usage(message: str) -> "NoReturn":
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(2)


def _eval_octonion(text: str, tol: float) -> Octonion:
    try:
        mv = eval_text(text, tol)
        return Octonion.from_multivector(mv)
    except (ParseError, EvalError) as exc:
        _fail_usage(str(exc))
    except ValueError:
        _fail_usage(f"expression {text!r} is not a paravector")


def _cmd_table(args) -> int:
    x = None
    if args.deform is not None:
        x = _eval_octonion(args.deform, args.tol)
    labels = [f"e{a}" for a in range(8)]
    rows = []
    for a in range(8):
        row = []
        for b in range(8):
            if x is None:
                prod = oct_mul(E[a], E[b])
            else:
                try:
                    prod = x_product(E[a], E[b], x, args.tol)
                except ValueError as exc:
                    _fail_usage(str(exc))
            row.append(format_octonion(prod))
        rows.append(row)
    if args.format == "json":
        print(json.dumps({"labels": labels, "table": rows}, indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow([""] + labels)
        for label, row in zip(labels, rows):
            w.writerow([label] + row)
    else:
        width = max(len(cell) for row in rows for cell in row)
        width = max(width, max(len(l) for l in labels))
        head = " | ".join(l.rjust(width) for l in labels)
        print(" " * (width + 3) + head)
        for label, row in zip(labels, rows):
            print(label.rjust(width) + " | "
                  + " | ".join(cell.rjust(width) for cell in row))
    return 0


def _cmd_eval(args) -> int:
    try:
        mv = eval_text(args.expr, args.tol)
    except (ParseError, EvalError) as exc:
        _fail_usage(str(exc))
    print(format_multivector(mv))
    return 0


def _report_lines_text(report) -> str:
    status = "PASS" if report.passed else "FAIL"
    line = (f"{report.suite_id}: {status} "
            f"({report.cases_total} cases, {len(report.failures)} failures, "
            f"seed {report.seed}, tol {format_real(report.tolerance)})")
    parts = [line]
    for f in report.failures[:20]:
        parts.append(f"  inputs={list(f.inputs)} lhs={f.lhs} rhs={f.rhs} "
                     f"residual={format_real(f.residual)}")
    if len(report.failures) > 20:
        parts.append(f"  ... {len(report.failures) - 20} more")
    return "\n".join(parts)


def _reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["suite", "cases_total", "inputs", "lhs", "rhs", "residual",
                "seed", "tolerance"])
    for r in reports:
        if not r.failures:
            w.writerow([r.suite_id, r.cases_total, "", "", "", "",
                        r.seed, format_real(r.tolerance)])
        for f in r.failures:
            w.writerow([r.suite_id, r.cases_total, ";".join(f.inputs),
                        f.lhs, f.rhs, format_real(f.residual),
                        r.seed, format_real(r.tolerance)])
    return buf.getvalue().rstrip("\n")


def _cmd_verify(args) -> int:
    if args.suite == "all":
        suite_ids = list(SUITES)
    elif args.suite in SUITES:
        suite_ids = [args.suite]
    else:
        _fail_usage(f"unknown suite {args.suite!r}; choose from "
                    f"{', '.join(SUITES)} or 'all'")
    reports = [run_suite(SuiteConfig(sid, args.seed, args.samples, args.tol))
               for sid in suite_ids]
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload,
                         indent=2))
    elif args.format == "csv":
        print(_reports_csv(reports))
    else:
        for r in reports:
            print(_report_lines_text(r))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_torsion(args) -> int:
    x = _eval_octonion(args.point, args.tol)
    try:
        tensor = torsion(x, args.tol)
    except ValueError as exc:
        _fail_usage(str(exc))
    entries = [(a, b, c, float(tensor.T[a, b, c]))
               for a in range(1, 8) for b in range(1, 8) for c in range(1, 8)
               if tensor.T[a, b, c] != 0.0]
    if args.format == "json":
        print(json.dumps({"point": format_octonion(x),
                          "components": [[a, b, c, v]
                                         for a, b, c, v in entries]},
                         indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["a", "b", "c", "T_abc"])
        for a, b, c, v in entries:
            w.writerow([a, b, c, format_real(v)])
    else:
        for a, b, c, v in entries:
            print(f"T[{a},{b},{c}] = {format_real(v)}")
    return 0


def _cmd_hopf(args) -> int:
    x = _eval_octonion(args.point, args.tol)
    try:
        h = hopf(x, args.tol)
    except ValueError as exc:
        _fail_usage(str(exc))
    coords = [float(v) for v in h.A]
    if args.format == "json":
        print(json.dumps({"point": format_octonion(x), "coords": coords}))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["A3", "A4", "A5", "A6", "A7"])
        w.writerow([format_real(v) for v in coords])
    else:
        print(" ".join(format_real(v) for v in coords))
    return 0


def _cmd_xi(args) -> int:
    members = [format_octonion(m) for m in xi_set(args.level)]
    if args.format == "json":
        print(json.dumps({"level": args.level, "members": members}, indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["member"])
        for m in members:
            w.writerow([m])
    else:
        for m in members:
            print(m)
    return 0


def _cmd_search(args) -> int:
    domain = "basis_blades" if args.domain == "basis" else "random"
    report = search_counterexamples(args.identity, domain, args.seed,
                                    args.samples, args.tol)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    elif args.format == "csv":
        print(_reports_csv([report]))
    else:
        print(f"{report.suite_id} over {domain}: {report.cases_total} cases, "
              f"{len(report.failures)} witnesses")
        for f in report.failures[:20]:
            print(f"  inputs={list(f.inputs)} lhs={f.lhs} rhs={f.rhs} "
                  f"residual={format_real(f.residual)}")
        if len(report.failures) > 20:
            print(f"  ... {len(report.failures) - 20} more")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
    common.add_argument("--samples", type=int, default=200)

    parser = argparse.ArgumentParser(
        prog="sevensphere",
        description="octonion and Clifford product calculator and verifier")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common],
                       help="print the 8x8 product table")
    p.add_argument("--deform", metavar="EXPR", default=None,
                   help="unit paravector deforming the product")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("verify", parents=[common],
                       help="run verification suites")
    p.add_argument("suite", help="suite name or 'all'")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("torsion", parents=[common],
                       help="torsion components at a point")
    p.add_argument("--point", required=True)
    p.set_defaults(func=_cmd_torsion)

    p = sub.add_parser("hopf", parents=[common],
                       help="project a point to the 4-sphere")
    p.add_argument("--point", required=True)
    p.set_defaults(func=_cmd_hopf)

    p = sub.add_parser("xi", parents=[common],
                       help="list an exceptional deformation set")
    p.add_argument("level", type=int, choices=(0, 1, 2, 3))
    p.set_defaults(func=_cmd_xi)

    p = sub.add_parser("search", parents=[common],
                       help="counterexample search for a candidate identity")
    p.add_argument("identity", choices=SEARCH_IDENTITIES)
    p.add_argument("--domain", choices=("basis", "random"), default="basis")
    p.set_defaults(func=_cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
