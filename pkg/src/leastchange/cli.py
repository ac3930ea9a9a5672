"""Command-line interface: count tables, emit curves, run verification suites.

Exit codes: 0 success/agreement, 1 verification or agreement failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import reference
from .dags import count_dags_by_edges, is_acyclic, matrix_to_digraph
from .enumeration import count_pertinent, default_workers
from .errors import BudgetError, DimensionError, PatternError
from .genfunc import gf_edge_table
from .matrices import TypeSpec, permanent_expansion
from .probability import emit_curve, family_tables, find_order_violation
from .tables import CoefficientTable
from .valuesets import (
    ValueSet,
    attaining_matrices,
    attaining_patterns,
    check_inclusion,
    complement_identity_check,
    counterexample_report,
    least_determinant,
    least_determinant_binary,
)

VERIFY_SUITES = (
    "tables",
    "routes",
    "acyclic",
    "witnesses",
    "inclusion",
    "complement",
    "oeis",
    "all",
)


def _compute(spec: TypeSpec, token: str, workers: int) -> CoefficientTable:
    if token == "enumeration":
        return count_pertinent(spec, workers=workers)
    if token == "dag":
        return count_dags_by_edges(spec.n)
    if token == "gf":
        return gf_edge_table(spec.n)
    raise ValueError(f"unknown route {token!r}")


def cmd_count(args, parser) -> int:
    spec = TypeSpec(args.family, args.n)
    if args.route in ("dag", "gf") and args.family != "C":
        parser.error(f"route {args.route} applies only to family C")
    if args.route == "all":
        if args.family == "C":
            # census and enumeration stop at n=5; the series route continues
            tokens = (["enumeration", "dag"] if args.n <= 5 else []) + ["gf"]
        else:
            tokens = ["enumeration"]
    else:
        tokens = [args.route]

    tables = [(t, _compute(spec, t, args.workers)) for t in tokens]
    out = _open_out(args.out)
    try:
        for token, table in tables:
            _print_table(table, token, args.format, out)
    finally:
        if args.out:
            out.close()

    first = tables[0][1]
    for token, table in tables[1:]:
        if table.coeffs != first.coeffs:
            print(
                f"route mismatch: {token} disagrees with {tables[0][0]}",
                file=sys.stderr,
            )
            return 1
    return 0


def _print_table(table: CoefficientTable, token: str, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(table.as_dict(route_token=token)) + "\n")
    elif fmt == "csv":
        out.write("i,count\n")
        for i, c in enumerate(table.coeffs):
            out.write(f"{i},{c}\n")
    else:
        spec = table.spec
        out.write(
            f"family={spec.family} n={spec.n} m={spec.m} i_max={spec.i_max} route={token}\n"
        )
        out.write("coeffs: " + " ".join(str(c) for c in table.coeffs) + "\n")
        out.write(f"total: {table.total}\n")


def cmd_least(args, parser) -> int:
    spec = TypeSpec(args.family, args.n)
    try:
        xset = ValueSet.parse(args.values) if "," in args.values else _interval(args.values)
    except ValueError as exc:
        parser.error(str(exc))
    attaining = attaining_matrices(spec, xset)
    patterns = attaining_patterns(spec, xset)
    result = {
        "family": args.family,
        "n": args.n,
        "values": str(xset),
        "least_det": str(least_determinant(spec, xset)),
        "least_det_binary": str(least_determinant_binary(spec, xset)),
        "attaining": len(attaining),
        "attaining_patterns": len(patterns),
        "by_nonzeros": {str(i): len(ms) for i, ms in attaining.partition().items()},
    }
    if args.format == "json":
        print(json.dumps(result))
    else:
        for key, value in result.items():
            print(f"{key}: {value}")
    return 0


def _interval(text: str) -> ValueSet:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        lo, hi = text[1:-1].split(":")
        return ValueSet.continuous(Fraction(lo), Fraction(hi))
    raise ValueError(
        "value set must be a comma-separated list like 0,1/2@1/2,2@1/2 "
        "or an interval like [0:2]"
    )


def cmd_curve(args, parser) -> int:
    step = Fraction(args.step)
    out = _open_out(args.out)
    tables = family_tables(args.n)
    try:
        emit_curve(args.n, step, sink=out, tables=tables)
    finally:
        if args.out:
            out.close()
    report = find_order_violation(
        args.n, Fraction(1, 100), Fraction(99, 100), Fraction(1, 1000), tables=tables
    )
    sink = sys.stdout if args.out else sys.stderr
    if report.never_holds:
        sink.write("chain A > B > C with widening gaps: no sampled r satisfies it\n")
    elif report.always_holds:
        sink.write("chain A > B > C with widening gaps holds at every sampled r\n")
    else:
        lo, hi = report.bracket
        sink.write(
            f"chain boundary between {float(lo):.6g} and {float(hi):.6g} "
            f"(holds above, first failure below)\n"
        )
    return 0


def _open_out(path):
    if path:
        return open(path, "w", encoding="utf-8", newline="\n")
    return sys.stdout


def cmd_verify(args, parser) -> int:
    names = VERIFY_SUITES[:-1] if args.suite == "all" else (args.suite,)
    checks: list[tuple[str, bool, str]] = []
    for name in names:
        checks.extend(_SUITES[name](args))
    ok = all(passed for _, passed, _ in checks)
    if args.format == "json":
        payload = [
            {"check": name, "pass": passed, "detail": detail}
            for name, passed, detail in checks
        ]
        print(json.dumps(payload))
        return 0 if ok else 1
    width = max(len(name) for name, _, _ in checks)
    for name, passed, detail in checks:
        tag = "PASS" if passed else "FAIL"
        line = f"{tag}  {name.ljust(width)}"
        if detail:
            line += f"  {detail}"
        print(line)
    return 0 if ok else 1


def _suite_tables(args) -> list[tuple[str, bool, str]]:
    out = []
    for family, rows in reference.REFERENCE_COUNTS.items():
        for n, expected in rows.items():
            table = count_pertinent(TypeSpec(family, n), workers=args.workers)
            ok = table.coeffs == expected
            detail = "" if ok else f"enumerated {table.coeffs}"
            out.append((f"table {family} n={n}", ok, detail))
    return out


def _suite_routes(args) -> list[tuple[str, bool, str]]:
    out = []
    for n in range(1, (args.n or 5) + 1):
        spec = TypeSpec("C", n)
        t_enum = count_pertinent(spec, workers=args.workers)
        t_dag = count_dags_by_edges(n)
        t_gf = gf_edge_table(n)
        ok = t_enum.coeffs == t_dag.coeffs == t_gf.coeffs
        out.append((f"routes agree C n={n}", ok, "" if ok else "mismatch"))
    return out


def _suite_acyclic(args) -> list[tuple[str, bool, str]]:
    n_max = args.n or 4
    out = []
    for n in range(1, n_max + 1):
        spec = TypeSpec("C", n)
        bad = 0
        for bits in range(1 << spec.m):
            matrix = spec.matrix_from_bits(bits)
            if (permanent_expansion(matrix) == 1) != is_acyclic(matrix_to_digraph(matrix)):
                bad += 1
        out.append(
            (f"permanent-1 vs acyclic n={n}", bad == 0, f"{1 << spec.m} matrices")
        )
    return out


def _suite_witnesses(args) -> list[tuple[str, bool, str]]:
    report = counterexample_report()
    return [
        (claim.description, claim.ok, f"expected {claim.expected}, got {claim.computed}")
        for claim in report.claims
    ]


def _suite_inclusion(args) -> list[tuple[str, bool, str]]:
    dis = ValueSet.discrete([0, Fraction(1, 2), 2])
    cnt = ValueSet.continuous(0, 2)
    out = []
    for family in ("A", "B"):
        rep = check_inclusion(family, 2, dis, cnt)
        out.append((f"inclusion holds for {family} n=2", rep.holds, ""))
    rep_c = check_inclusion("C", 2, dis, cnt)
    out.append(("inclusion fails for C n=2", not rep_c.holds, ""))
    zero_one = check_inclusion("C", 2, ValueSet.discrete([0, 1]), ValueSet.continuous(0, 1))
    out.append(("C n=2 over {0,1} vs [0,1] disjoint", zero_one.disjoint, ""))
    return out


def _suite_complement(args) -> list[tuple[str, bool, str]]:
    report = complement_identity_check()
    detail = f"sum coefficients {report.sum_coeffs}"
    return [("continuous + discrete probabilities sum to 1", report.ok, detail)]


def _suite_oeis(args) -> list[tuple[str, bool, str]]:
    out = []
    for family, totals in reference.PUBLISHED_TOTALS.items():
        for n, expected in enumerate(totals, start=1):
            total = count_pertinent(TypeSpec(family, n), workers=args.workers).total
            ok = total == expected
            detail = f"enumerated {total}" + ("" if ok else f", published {expected}")
            out.append((f"total {family} n={n}", ok, detail))
    return out


_SUITES = {
    "tables": _suite_tables,
    "routes": _suite_routes,
    "acyclic": _suite_acyclic,
    "witnesses": _suite_witnesses,
    "inclusion": _suite_inclusion,
    "complement": _suite_complement,
    "oeis": _suite_oeis,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leastchange",
        description="Exact counts and probabilities for least-change determinant perturbation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="coefficient table for one family")
    p_count.add_argument("--family", required=True, choices=("A", "B", "C"))
    p_count.add_argument("--n", required=True, type=int)
    p_count.add_argument(
        "--route", default="enumeration", choices=("enumeration", "dag", "gf", "all")
    )
    p_count.add_argument("--format", default="text", choices=("json", "csv", "text"))
    p_count.add_argument("--workers", type=int, default=default_workers())
    p_count.add_argument("--out", default=None)

    p_curve = sub.add_parser("curve", help="probability curves for all families")
    p_curve.add_argument("--n", required=True, type=int)
    p_curve.add_argument("--step", default="1/100")
    p_curve.add_argument("--out", default=None)

    p_least = sub.add_parser("least", help="least attainable |det| over a value set")
    p_least.add_argument("--family", required=True, choices=("A", "B", "C"))
    p_least.add_argument("--n", required=True, type=int)
    p_least.add_argument(
        "--values",
        required=True,
        help="0,1/2@1/2,2@1/2 (weights optional) or an interval [0:2]",
    )
    p_least.add_argument("--format", default="text", choices=("json", "text"))

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=VERIFY_SUITES)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--workers", type=int, default=default_workers())
    p_verify.add_argument("--format", default="text", choices=("json", "text"))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return cmd_count(args, parser)
        if args.command == "curve":
            return cmd_curve(args, parser)
        if args.command == "least":
            return cmd_least(args, parser)
        return cmd_verify(args, parser)
    except (DimensionError, BudgetError, PatternError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
