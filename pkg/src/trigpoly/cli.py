"""Command-line front end: table generation, verification suites, the
factorization battery, golden-ratio fixed points, and OEIS cross-checks.

Exit codes: 0 all checks pass, 1 verification or conjecture failure,
2 usage error.  Tables go to stdout, diagnostics to stderr.  JSON output
encodes every coefficient as a decimal string, since entries outgrow
64-bit integers quickly.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import basechange, chebyshev, factor, fourier, oeis, riordan, spread
from .checks import CheckReport

GEN_OBJECTS = ("T", "U", "P", "V", "S", "Z", "Beven", "Bodd", "M", "L",
               "pyramidal", "phi-table")

SUITES = {
    "chebyshev": chebyshev.suite,
    "riordan": riordan.suite,
    "basechange": basechange.suite,
    "fourier": fourier.suite,
    "spread": spread.suite,
}


def _matrix_for(name: str, size: int) -> list[list[int]]:
    from .combinatorics import even_triangle, odd_triangle

    if name in ("T", "U", "P", "V"):
        return chebyshev.cheb_matrix(name, size)
    if name == "S":
        return spread.spread_matrix(size)
    if name == "Z":
        return spread.zpread_matrix(size)
    if name == "Beven":
        return even_triangle(size)
    if name == "Bodd":
        return odd_triangle(size)
    if name == "M":
        return fourier.super_catalan_matrix(size)
    if name == "L":
        return fourier.lower_binomial_matrix(size)
    raise ValueError(name)


def render_plain(rows: list[list[int]]) -> str:
    """Right-aligned columns with blank cells for structural zeros."""
    cells = [[str(v) if v else "" for v in row] for row in rows]
    widths = [max(len(cells[i][j]) for i in range(len(cells)))
              for j in range(len(cells[0]))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
             for row in cells]
    return "\n".join(lines)


def render_csv(rows: list[list[int]]) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in rows)


def render_json(name: str, size: int, rows: list[list[int]]) -> str:
    payload = {
        "object": name,
        "size": size,
        "rows": [[str(v) for v in row] for row in rows],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def _cmd_gen(args) -> int:
    name, size, fmt = args.object, args.size, args.format
    if name == "pyramidal":
        from .combinatorics import pyramidal_row

        terms = pyramidal_row(size, args.terms)
        if fmt == "plain":
            print(" ".join(str(v) for v in terms))
        elif fmt == "csv":
            print(",".join(str(v) for v in terms))
        else:
            print(json.dumps({"object": "pyramidal", "row": size,
                              "terms": [str(v) for v in terms]},
                             indent=2, sort_keys=True))
        return 0
    if name == "phi-table":
        table = factor.extract_psi(factor.build_factor_table(size))
        if fmt == "json":
            payload = {
                str(d): {
                    "phi": [str(c) for c in table.phi[d].coeffs],
                    "psi": [str(c) for c in table.psi[d].coeffs]
                    if d in table.psi else None,
                }
                for d in range(1, size + 1)
            }
            print(json.dumps(payload, indent=2, sort_keys=True))
        elif fmt == "csv":
            for d in range(1, size + 1):
                print(f"{d}," + ",".join(str(c) for c in table.phi[d].coeffs))
        else:
            print(factor.format_table(table))
        return 0
    rows = _matrix_for(name, size)
    if fmt == "plain":
        print(render_plain(rows))
    elif fmt == "csv":
        print(render_csv(rows))
    else:
        print(render_json(name, size, rows))
    return 0


def _print_reports(reports: list[CheckReport]) -> int:
    failed = 0
    for report in reports:
        print(report.summary())
        for failure in report.failures[:10]:
            print(f"  counterexample: {failure}", file=sys.stderr)
        if len(report.failures) > 10:
            print(f"  ... {len(report.failures) - 10} more failures",
                  file=sys.stderr)
        failed += not report.ok
    total = sum(r.cases for r in reports)
    bad = sum(len(r.failures) for r in reports)
    print(f"{'FAIL' if bad else 'OK'}: {total} checks, {bad} failures")
    return 1 if bad else 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(SUITES)
    else:
        names = [args.suite]
    tasks = [(name, SUITES[name]) for name in names]
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(lambda t: t[1](args.order), tasks))
    else:
        results = [fn(args.order) for _, fn in tasks]
    reports: list[CheckReport] = []
    for (name, _), suite_reports in zip(tasks, results):
        for report in suite_reports:
            report.name = f"{name}: {report.name}"
            reports.append(report)
    return _print_reports(reports)


def _cmd_factor(args) -> int:
    try:
        table = factor.extract_psi(factor.build_factor_table(args.max_n))
    except factor.ConjectureViolation as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return 1
    print(factor.format_table(table))
    battery = factor.run_conjecture_battery(table)
    status = _print_reports([battery.report])
    for note in battery.notes:
        print(f"note: {note}")
    if args.report_pyramidal:
        print(factor.pyramidal_column_report(table))
    return status


def _cmd_fixed_points(args) -> int:
    return _print_reports([factor.golden_fixed_points(args.max_n)])


def _cmd_oeis(args) -> int:
    try:
        fixture = oeis.fetch_sequence(args.id, max_terms=args.terms,
                                      offline=args.offline)
    except oeis.NotAvailableOffline:
        print(f"{args.id} is not available offline", file=sys.stderr)
        return 1
    except oeis.NetworkError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    print(f"{args.id} [{fixture.source}] offset {fixture.offset}: "
          + ", ".join(str(t) for t in fixture.terms))
    generator = oeis.generator_for_id(args.id)
    if generator is None:
        print("no registered generator; terms only")
        return 0
    report = oeis.crosscheck(args.id, generator, args.terms,
                             offline=args.offline)
    return _print_reports([report])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigpoly",
        description="Exact tables and verification suites for trigonometric "
                    "polynomial bases")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a coefficient table")
    gen.add_argument("--object", required=True, choices=GEN_OBJECTS)
    gen.add_argument("--size", type=int, default=8,
                     help="matrix size, factor-table bound, or pyramidal row")
    gen.add_argument("--terms", type=int, default=12,
                     help="term count for pyramidal rows")
    gen.add_argument("--format", choices=("plain", "csv", "json"),
                     default="plain")
    gen.set_defaults(fn=_cmd_gen)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=tuple(SUITES) + ("all",),
                        required=True)
    verify.add_argument("--order", type=int, default=30)
    verify.add_argument("--jobs", type=int, default=1,
                        help="worker threads for independent suites")
    verify.set_defaults(fn=_cmd_verify)

    fac = sub.add_parser("factor", help="factorization conjecture battery")
    fac.add_argument("--max-n", type=int, required=True)
    fac.add_argument("--report-pyramidal", action="store_true")
    fac.set_defaults(fn=_cmd_factor)

    fixed = sub.add_parser("fixed-points", help="golden-ratio fixed points")
    fixed.add_argument("--max-n", type=int, required=True)
    fixed.set_defaults(fn=_cmd_fixed_points)

    oe = sub.add_parser("oeis", help="fetch or cross-check an OEIS sequence")
    oe.add_argument("--id", required=True)
    oe.add_argument("--terms", type=int, default=12)
    oe.add_argument("--offline", action="store_true")
    oe.set_defaults(fn=_cmd_oeis)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
