"""Command-line interface: ``hilbfix {series,components,table2,verify,dump-catalog}``.

Exit codes: 0 success (empty fixed loci and published-value discrepancies
included), 1 usage error, 2 unknown group, 3 internal check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from hilbfix import audit
from hilbfix.catalog import (
    ABELIAN,
    K3,
    NotKummerEnabledError,
    UnknownActionError,
    catalog_text,
    kummer_action,
    list_actions,
    lookup,
)
from hilbfix.fixloc import component_counts, support_gcd_pair, table2_row
from hilbfix.qseries import coefficient
from hilbfix.theta import identity_projection, theta_series
from hilbfix.verify import run_checks

SCHEMA_VERSION = "1"
EXIT_USAGE, EXIT_UNKNOWN, EXIT_INTERNAL = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _envelope(command: str, inputs: dict, payload, warnings) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "payload": payload,
        "warnings": list(warnings),
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _action(group: str, surface: str):
    if surface == ABELIAN:
        return kummer_action(group)
    return lookup(group, surface)


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonnegative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


# -- commands ------------------------------------------------------------------


def cmd_series(args) -> tuple[str, list[str]]:
    action = _action(args.group, args.surface)
    series = theta_series(action, args.order)
    decorated = action.decorations is not None
    projected = identity_projection(series)
    inputs = {"group": action.name, "label": action.label, "surface": action.surface, "order": args.order,
              "project_identity": args.project_identity}
    if args.format == "json":
        payload = {"coefficients": list(projected.coeffs)}
        if decorated and not args.project_identity:
            payload["group_ring"] = [
                [{"element": list(g), "coeff": c} for g, c in coefficient(series, e).items()]
                for e in range(args.order + 1)
            ]
            payload["torsion"] = list(action.torsion.invariant_factors)
        return _envelope("series", inputs, payload, []), []
    if args.format == "csv":
        return _csv(("exponent", "coefficient"), enumerate(projected.coeffs)), []
    lines = []
    if decorated and not args.project_identity:
        lines.append(f"# group ring Z[{action.torsion}], elements as residue tuples")
        lines += [f"q^{e}: {coefficient(series, e)}" for e in range(args.order + 1)]
        lines.append("# [1]-projection")
    lines.append(", ".join(str(c) for c in projected.coeffs))
    return "\n".join(lines) + "\n", []


def cmd_components(args) -> tuple[str, list[str]]:
    action = _action(args.group, args.surface)
    report = component_counts(action, args.n)
    warnings = list(report.warnings)
    if args.format == "json":
        inputs = {"group": action.name, "label": action.label, "surface": action.surface, "n": args.n}
        return _envelope("components", inputs, report.to_dict(), warnings), warnings
    if args.format == "csv":
        return _csv(("dim", "count"), [(r.dim, r.count) for r in report.rows]), warnings
    if report.empty:
        head = f"{action.name} on S^[{args.n}]: empty fixed locus (p = {report.p_empirical})"
        return head + "\n", warnings
    lines = [
        f"{action.name} on S^[{args.n}] ({action.surface}): top dim {2 * report.top_k}, "
        f"epsilon {report.epsilon}, p {report.p_empirical} (formula {report.p_formula})"
    ]
    lines += [f"dim {r.dim}: {r.count}" for r in report.rows]
    return "\n".join(lines) + "\n", warnings


def _table2_payload():
    published = {row.label: row for row in audit.PUBLISHED_TABLE2}
    rows = []
    for action in list_actions(K3, admissible=True):
        cells = table2_row(action)
        p_emp, p_form = support_gcd_pair(action)
        pub = published.get(action.label)
        cmp = audit.compare_table2(pub, action) if pub else None
        status = {(c.row, c.index): c for c in cmp.cells} if cmp else {}
        out_cells = []
        for cell in cells:
            entry = {"residue": cell.residue, "epsilon": cell.epsilon, "count": cell.count}
            check = status.get(("top", cell.k))
            if cell.epsilon == 1:
                below = status.get(("below", cell.k))
                check = below if below and below.published != audit.STAR else check
            entry["printed"] = None if check is None else check.published
            entry["match"] = None if check is None else check.match
            out_cells.append(entry)
        rows.append({
            "label": action.label,
            "group": action.name,
            "order": action.order,
            "p_printed": pub.p if pub else None,
            "p_empirical": p_emp,
            "p_formula": p_form,
            "cells": out_cells,
            "mismatches": len(cmp.mismatches) if cmp else None,
        })
    return rows


def cmd_table2(args) -> tuple[str, list[str]]:
    rows = _table2_payload()
    warnings = audit.table2_warnings()
    if args.format == "json":
        return _envelope("table2", {}, rows, warnings), warnings
    if args.format == "csv":
        flat = [
            (r["label"], r["group"], c["residue"], c["epsilon"], c["count"], c["printed"], c["match"])
            for r in rows for c in r["cells"]
        ]
        return _csv(("label", "group", "residue", "epsilon", "count", "printed", "match"), flat), warnings
    lines = []
    for r in rows:
        computed = ", ".join(f"{c['count']}{'*' if c['epsilon'] else ''}" for c in r["cells"])
        flags = "".join("." if c["match"] else ("x" if c["match"] is False else "?") for c in r["cells"])
        lines.append(
            f"{r['label']:>2} {r['group']:<6} |G|={r['order']:<3} p printed {r['p_printed']} "
            f"empirical {r['p_empirical']} formula {r['p_formula']}"
        )
        lines.append(f"   computed: {computed}")
        lines.append(f"   match:    {flags}")
    lines.append("(* marks defect 1: the count is one dimension below floor(n/|G|))")
    return "\n".join(lines) + "\n", warnings


def cmd_verify(args) -> tuple[str, list[str], int]:
    scopes = {"admissible": args.admissible, "kummer": args.kummer, "local": args.local, "catalog": args.catalog}
    if not any(scopes.values()):
        scopes = dict.fromkeys(scopes, True)
    results = run_checks(**scopes, max_order=args.max_order, orders=args.a, length=args.len)
    warnings = audit.audit_warnings() if (scopes["admissible"] or scopes["kummer"]) else []
    failed = [r for r in results if not r.passed]
    code = EXIT_INTERNAL if failed else 0
    inputs = {
        "scopes": [k for k, v in scopes.items() if v],
        "max_order": args.max_order,
        "a": [args.a.start, args.a.stop - 1],
        "len": args.len,
    }
    if args.format == "json":
        payload = {"passed": not failed, "checks": [r.to_dict() for r in results]}
        return _envelope("verify", inputs, payload, warnings), warnings, code
    if args.format == "csv":
        rows = [(r.name, "PASS" if r.passed else "FAIL", r.checked, r.detail) for r in results]
        return _csv(("check", "status", "checked", "detail"), rows), warnings, code
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checked} checked){' ' + r.detail if r.detail else ''}"
             for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed, {len(warnings)} published-value warnings")
    return "\n".join(lines) + "\n", warnings, code


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hilbfix", description="Fixed loci of symplectic group actions on Hilbert schemes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    formats = ("text", "json", "csv")

    p = sub.add_parser("series", help="theta series coefficients 0..order")
    p.add_argument("--group", required=True, help="label number or name, e.g. 55, C_2x2")
    p.add_argument("--surface", choices=(K3, ABELIAN), default=K3)
    p.add_argument("--order", type=_nonnegative, required=True)
    p.add_argument("--project-identity", action="store_true", help="only the [1]-coefficients (Kummer)")
    p.add_argument("--format", choices=formats, default="text")

    p = sub.add_parser("components", help="component counts of the fixed locus on S^[n]")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--surface", choices=(K3, ABELIAN), default=K3)
    p.add_argument("--format", choices=formats, default="text")

    p = sub.add_parser("table2", help="top-dimensional counts for the admissible groups")
    p.add_argument("--format", choices=formats, default="text")

    p = sub.add_parser("verify", help="two-path checks and the published-value audit")
    p.add_argument("--admissible", action="store_true")
    p.add_argument("--kummer", action="store_true")
    p.add_argument("--local", action="store_true")
    p.add_argument("--catalog", action="store_true")
    p.add_argument("--max-order", type=_nonnegative, default=None)
    p.add_argument("--a", type=_range, default=range(2, 7), help="cyclic orders, e.g. 2..6")
    p.add_argument("--len", type=_nonnegative, default=12, help="largest partition size")
    p.add_argument("--format", choices=formats, default="text")

    sub.add_parser("dump-catalog", help="print the embedded catalog file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and (args.a.start < 2 or args.a.stop - 1 > 6 or not len(args.a)):
        parser.error("--a must lie within 2..6")
    if args.command == "verify" and args.len > 14:
        parser.error("--len must be at most 14")
    code = 0
    try:
        if args.command == "series":
            text, warnings = cmd_series(args)
        elif args.command == "components":
            text, warnings = cmd_components(args)
        elif args.command == "table2":
            text, warnings = cmd_table2(args)
        elif args.command == "verify":
            text, warnings, code = cmd_verify(args)
        else:
            text, warnings = catalog_text(), []
    except UnknownActionError as exc:
        print(f"hilbfix: {exc.args[0]}", file=sys.stderr)
        return EXIT_UNKNOWN
    except NotKummerEnabledError as exc:
        print(f"hilbfix: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    sys.stdout.write(text)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
