"""Command-line entry point ``a1count``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .affine import AffineCount
from .classes import PlaneClass
from .fixtures import check_fixtures, format_fixtures, load_fixtures
from .pipeline import RouteDisagreement, build_report, compute_n, solve_x
from .tables import InconsistentSystem, solved_tables
from .torsion import base_points, model_weights, ordered_counts

__all__ = ["main", "build_parser"]

FORMATS = ("text", "json", "csv", "tsv")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="a1count", description="Counts of A1-curves on a cubic surface with boundary.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="count degree-d curves with the route breakdown")
    c.add_argument("--degree", "-d", type=int, required=True)
    c.add_argument("--symbolic", action="store_true", help="leave the unknown x unresolved")

    t = sub.add_parser("table", help="print the solved table for one degree e")
    t.add_argument("--e", type=int, required=True)
    t.add_argument("--format", choices=FORMATS, default="text")
    t.add_argument("--substitute", action="store_true", help="replace x by its solved value")

    v = sub.add_parser("verify", help="check the solved tables against a fixture file")
    v.add_argument("--fixtures", metavar="PATH", help="fixture TSV (default: bundled tables)")
    v.add_argument("--verbose", "-v", action="store_true", help="list every entry")

    s = sub.add_parser("torsion", help="ordered solution counts of the torsion relation")
    s.add_argument("--degree", "-d", type=int, required=True)
    s.add_argument("--coset", metavar="ROW", help="coset row of d*P (0 or 2/3); default: all")
    return p


def _cmd_compute(args, out) -> int:
    res = compute_n(args.degree, symbolic=args.symbolic)
    print(f"n({args.degree};;) = {res.value}", file=out)
    print(f"  torsion route: {res.breakdown()}", file=out)
    if res.engine is not None:
        print(f"  relation engine: n({args.degree};;) = {res.engine}", file=out)
    if not args.symbolic:
        print(f"  x = n(6;2^8,1;) = {solve_x()}", file=out)
    if res.note:
        print(f"  note: {res.note}", file=out)
    return 0


def _table_rows(e: int, substitute: bool):
    sol = solved_tables()
    x = solve_x(sol) if substitute else None
    keys = sorted((k for k in sol.values if k.e == e), key=lambda k: (k.b, len(k.a), tuple(-v for v in k.a)))
    for k in keys:
        v = sol.values[k]
        if x is not None:
            v = AffineCount.lift(v.subs(x))
        yield k, v


def _cmd_table(args, out) -> int:
    if args.e < 1 or args.e > 6:
        raise _UsageError(f"a1count table: error: --e must be in 1..6, got {args.e}")
    rows = list(_table_rows(args.e, args.substitute))
    if args.format == "json":
        json.dump({str(k): str(v) for k, v in rows}, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["key", "e", "a", "b", "value"])
        for k, v in rows:
            w.writerow([str(k), k.e, ",".join(map(str, k.a)), ",".join(map(str, k.b)), str(v)])
    elif args.format == "tsv":
        out.write(format_fixtures(dict(rows)))
    else:
        width = max((len(k.pretty()) for k, _ in rows), default=0)
        for k, v in rows:
            print(f"{k.pretty():<{width}}  {v}", file=out)
    return 0


def _cmd_verify(args, out) -> int:
    fixtures = load_fixtures(args.fixtures)
    sol = solved_tables()
    x = solve_x(sol)
    rep = check_fixtures(fixtures, sol, x)
    for r in rep.results:
        if args.verbose or not r.ok:
            got = "-" if r.got is None else str(r.got)
            extra = f"  ({r.note})" if r.note else ""
            print(f"{r.status:<12} {r.key.pretty():<24} expected {r.expected}  got {got}{extra}", file=out)
    print(f"{fixtures.source}: {rep.summary()}", file=out)
    bad_res = [rel for rel, v in sol.residuals().items() if v]
    print(f"relations: {len(sol.relations)} checked, {len(bad_res)} nonzero residuals", file=out)
    report = build_report(fixtures)
    print("n_1..n_7 = " + ", ".join(str(report.n[d]) for d in sorted(report.n)) + f"  (x = {report.x})", file=out)
    return 0 if rep.ok and not bad_res else 1


def _fmt_class(c: PlaneClass) -> str:
    return str(c)


def _cmd_torsion(args, out) -> int:
    points = base_points(args.degree)
    if args.coset is not None:
        if args.coset not in points:
            raise _UsageError(f"a1count torsion: error: unknown coset row {args.coset!r}; choose from {sorted(points)}")
        points = {args.coset: points[args.coset]}
    for row, pt in points.items():
        counts = ordered_counts(args.degree, pt)
        print(f"d = {args.degree}, coset row {row}, P = {pt}", file=out)
        print(f"  {'class':<22}{'genus':>6}{'ordered':>9}", file=out)
        for c, k in counts.items():
            print(f"  {_fmt_class(c):<22}{c.genus:>6}{k:>9}", file=out)
        weights = model_weights(args.degree, pt)
        print(f"  total solutions: {sum(counts.values())}", file=out)
        print("  model weights: " + ", ".join(f"{_fmt_class(m.canonical())}:{w}" for m, w in weights.items()), file=out)
    return 0


_COMMANDS = {"compute": _cmd_compute, "table": _cmd_table, "verify": _cmd_verify, "torsion": _cmd_torsion}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"a1count: error: {exc}", file=sys.stderr)
        return 2
    except (RouteDisagreement, InconsistentSystem, ArithmeticError) as exc:
        print(f"a1count: verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
