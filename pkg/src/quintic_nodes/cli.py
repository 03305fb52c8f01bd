"""Command-line front end.

    quintic-nodes census --n 8 [--format json|md|csv] [--out PATH] [--approx]
    quintic-nodes verify --n 8 --alpha 3 --beta -1
    quintic-nodes arnold --n 8 --degree 5
    quintic-nodes pentagon --n 10
    quintic-nodes tables --which 3

Exit codes: 0 success, 1 bad arguments, 2 solver failure.
"""
from __future__ import annotations

import argparse
import re
import sys
import time
from fractions import Fraction
from functools import lru_cache

from . import report
from .bounds import BoundQuery, arnold_number
from .census import SolverError, census
from .exactnum import NumberField, Poly
from .hessian import NODE
from .pencil import PencilParam, SymPoint, verify_singular
from .pentagon import REFERENCE_PENTAGON_N3, pentagon_node_count

SUPPORTED_N = range(3, 11)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


@lru_cache(maxsize=None)
def _census(n: int):
    return census(n)


_ROOT = re.compile(r"^\s*root of \[([^\]]*)\]\s*(?:,\s*component\s+(\d+))?\s*$")


def parse_number(text: str, field: NumberField | None = None):
    """A rational "p/q" or "root of [c0, c1, ...], component k"."""
    m = _ROOT.match(text)
    if m is None:
        try:
            return Fraction(text), None
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"not an exact number: {text!r}") from exc
    try:
        coeffs = [Fraction(c.strip()) for c in m.group(1).split(",")]
        K = NumberField(Poly(coeffs))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad minimal polynomial in {text!r}: {exc}") from exc
    return K.gen, K


def _check_n(n: int):
    warnings = []
    if n < 3:
        raise UsageError(f"n must be at least 3 (got {n})")
    if n not in SUPPORTED_N:
        warnings.append(f"n = {n} is outside the tested range 3..10; the run may be slow")
    return warnings


def cmd_census(args) -> tuple[dict, str | None]:
    warnings = _check_n(args.n)
    t0 = time.perf_counter()
    r = _census(args.n)
    warnings += r.warnings + report.reference_warnings(r)
    doc = report.document("census", {"n": args.n, "format": args.format}, report.census_payload(r, args.approx),
                          warnings, time.perf_counter() - t0)
    if args.format == "md":
        return doc, report.census_md(r)
    if args.format == "csv":
        return doc, report.census_csv(r)
    return doc, None


def cmd_verify(args) -> tuple[dict, str | None]:
    warnings = _check_n(args.n)
    alpha, _ = parse_number(args.alpha)
    beta, _ = parse_number(args.beta)
    if not alpha:
        raise UsageError("(0 : 1) is the degenerate member S2*S3 whose singular locus is the variety S2 = S3 = 0")
    p = PencilParam(alpha, beta)
    t0 = time.perf_counter()
    r = _census(args.n)
    lam = p.lam
    summ = r.summary_for(p)
    exceptional = bool(summ and summ.exceptional)
    orbits = []
    total = 0
    for o, status in r.generic_status(lam):
        d = report.orbit_json(o)
        d["node_status"] = status
        orbits.append(d)
        total += o.points if status == NODE else 0
    if summ is not None:
        # the stored representative lives over its own field; use its parameter
        for o in summ.orbits:
            if not verify_singular(SymPoint(o.values, o.pattern), summ.param):
                raise SolverError(f"representative of {o.pattern} is not singular")
            orbits.append(report.orbit_json(o))
            total += o.points if o.node_status == NODE else 0
        for o in summ.continuous:
            orbits.append(report.orbit_json(o))
    all_nodes = all(o["node_status"] == NODE for o in orbits)
    payload = {
        "param": report.param_json(p),
        "exceptional": exceptional,
        "orbits": orbits,
        "all_nodes": all_nodes,
        "total_nodes": total,
    }
    if exceptional:
        warnings.append(f"{report.param_text(p)} is an exceptional parameter")
    doc = report.document("verify", {"n": args.n, "alpha": args.alpha, "beta": args.beta}, payload, warnings,
                          time.perf_counter() - t0)
    return doc, None


def cmd_arnold(args) -> tuple[dict, str | None]:
    try:
        q = BoundQuery(args.n, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = report.document("arnold", {"n": args.n, "degree": args.degree}, {"arnold_number": arnold_number(q)})
    return doc, None


def cmd_pentagon(args) -> tuple[dict, str | None]:
    if args.n < 3:
        raise UsageError(f"n must be at least 3 (got {args.n})")
    count = pentagon_node_count(args.n)
    warnings = []
    if args.n == 3 and count != REFERENCE_PENTAGON_N3:
        warnings.append(f"affine count {count} differs from the reference value {REFERENCE_PENTAGON_N3}; "
                        "the difference is presumably a point at infinity, not modelled here")
    doc = report.document("pentagon", {"n": args.n}, {"affine_node_count": count}, warnings)
    return doc, None


def cmd_tables(args) -> tuple[dict, str | None]:
    which = args.which
    warnings = []
    if which == 3:
        rows = report.table3_rows(_census)
        warnings.append("n = 3 pentagon cell: affine count, the reference value is one larger")
    else:
        r = _census(8)
        rows = report.table1_rows(r) if which == 1 else report.table2_rows(r)
        warnings += report.reference_warnings(r)
    headers = report.TABLE_HEADERS[which]
    doc = report.document("tables", {"which": which}, {"headers": headers, "rows": rows}, warnings)
    text = report.render_md(headers, rows) if args.format == "md" else (
        report.render_csv(headers, rows) if args.format == "csv" else None)
    return doc, text


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="quintic-nodes", description="Singular-point census of a symmetric quintic pencil.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("census", help="all singular orbits and the best parameter for P^n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("json", "md", "csv"), default="json")
    c.add_argument("--out")
    c.add_argument("--approx", action="store_true", help="add decimal approximations")
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", help="node status of every singular orbit at (alpha : beta)")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--alpha", required=True)
    v.add_argument("--beta", required=True)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("arnold", help="Arnold's number Ar_n(d)")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--degree", type=int, default=5)
    a.add_argument("--out")
    a.set_defaults(func=cmd_arnold)

    p = sub.add_parser("pentagon", help="node count of the pentagon construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pentagon)

    t = sub.add_parser("tables", help="summary tables 1-3")
    t.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    t.add_argument("--format", choices=("json", "md", "csv"), default="md")
    t.add_argument("--out")
    t.set_defaults(func=cmd_tables)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 2
    out = report.canonical_json(doc)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    sys.stdout.write(text if text is not None else out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
