"""Command-line front end: designs, precision queries, confidence intervals
and table regeneration.

Exit codes: 0 success, 1 domain error (a value outside its range, or an
impossible computation), 2 usage error (unknown flags, incomplete parameter
sets).  All parameters are flags; there is no interactive prompting.
`--format json` emits exactly the HTTP service's response schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import api, tables

_USAGE_CODES = {"missing_parameter", "unknown_field", "unknown_estimand",
                "unknown_operation", "unknown_method", "invalid_type"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pilotsize",
        description="Sample sizes, precisions and confidence intervals for "
                    "precision-driven pilot studies.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_request_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("estimand", choices=api.ESTIMANDS)
        p.add_argument("--confidence", type=float, help="confidence level 1 - alpha (default 0.95)")
        p.add_argument("--delta", type=float, help="requested absolute precision")
        p.add_argument("--k", type=float, help="requested relative precision")
        p.add_argument("--n", type=int, help="sample size")
        p.add_argument("--e", type=int, help="event count (lifetime designs)")
        p.add_argument("--p", type=float, help="expected or observed proportion")
        p.add_argument("--r", type=int, help="observed success count")
        p.add_argument("--rho", type=float, help="expected or observed correlation")
        p.add_argument("--s", type=float, help="sample standard deviation")
        p.add_argument("--mean", type=float, help="sample mean (or mean difference)")
        p.add_argument("--theta", type=float, help="observed mean lifetime")
        p.add_argument("--censoring", type=float, help="planned censored fraction (default 0)")
        p.add_argument("--p-u", dest="p_u", type=float, help="one-sided upper bound target")
        p.add_argument("--p-l", dest="p_l", type=float, help="one-sided lower bound target")
        p.add_argument("--direction", choices=("upper", "lower"),
                       help="side of a one-sided interval (default upper)")
        p.add_argument("--method",
                       choices=("exact", "normal", "poisson", "zero-acceptance",
                                "rule-of-three"),
                       help="computation method where several are available")
        cont = p.add_mutually_exclusive_group()
        cont.add_argument("--continuity", dest="continuity", action="store_true",
                          default=None, help="apply the continuity correction (default)")
        cont.add_argument("--no-continuity", dest="continuity", action="store_false",
                          default=None, help="drop the continuity correction")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    add_request_parser("design", "smallest sample size for a requested precision")
    add_request_parser("precision", "precision achieved by a given sample size")
    add_request_parser("ci", "confidence interval from an observation")

    t = sub.add_parser("table", help="regenerate design tables; no id checks "
                                     "all tables against the golden files")
    t.add_argument("table_id", nargs="?", help="table to print (e.g. T1 or T1_std_size)")
    t.add_argument("--format", choices=("table", "csv", "tsv", "markdown", "json"),
                   default="markdown")
    t.add_argument("--golden-dir", help="override the golden file directory "
                                        "(or set PILOTSIZE_GOLDEN_DIR)")

    s = sub.add_parser("serve", help="run the HTTP calculator service")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=None,
                   help="port to bind (or PILOTSIZE_PORT, default 8377)")
    s.add_argument("--origins", default=None,
                   help="comma-separated CORS origins (default *)")
    return parser


def _payload_from_args(args: argparse.Namespace) -> dict[str, Any]:
    payload: dict[str, Any] = {"estimand": args.estimand}
    for field in ("confidence", "delta", "k", "n", "e", "p", "r", "rho", "s",
                  "mean", "theta", "censoring", "p_u", "p_l", "direction",
                  "method", "continuity"):
        value = getattr(args, field, None)
        if value is not None:
            payload[field] = value
    return payload


def _fmt_pct(value: float, decimals: int = 2) -> str:
    return f"{value * 100.0:.{decimals}f}%"


def _fmt_interval(interval: dict[str, Any], estimand: str) -> str:
    lo, hi = interval["lower"], interval["upper"]
    if estimand.startswith("proportion"):
        return f"[{lo * 100.0:.1f}%, {hi * 100.0:.1f}%]"
    return f"[{lo:.2f}, {hi:.2f}]"


def _human(resp: dict[str, Any]) -> str:
    estimand = resp["estimand"]
    lines = []
    if resp["kind"] == "sample_size":
        if resp["events"] is not None:
            lines.append(f"E = {resp['events']}")
        lines.append(f"N = {resp['sample_size']}")
        if resp["precision"] is not None:
            label = "achieved upper bound" if estimand == "proportion-one-sided" \
                else "achieved precision"
            lines.append(f"{label} = {_fmt_pct(resp['precision'])}"
                         if estimand != "correlation"
                         else f"achieved width = {resp['precision']:.4f}")
    elif resp["kind"] == "precision":
        if estimand == "correlation":
            lines.append(f"width = {resp['precision']:.4f}")
        else:
            lines.append(f"delta = {_fmt_pct(resp['precision'])}")
        if resp["interval"] is not None:
            lines.append(f"normalized interval = {_fmt_interval(resp['interval'], estimand)}")
    else:
        lines.append(_fmt_interval(resp["interval"], estimand))
        if resp["hazard_interval"] is not None:
            lines.append(f"hazard rate interval = "
                         f"{_fmt_interval(resp['hazard_interval'], estimand)}")
    for warning in resp["warnings"]:
        lines.append(f"warning: {warning}")
    return "\n".join(lines)


def _run_request(operation: str, args: argparse.Namespace) -> int:
    resolved, errors = api.validate(operation, _payload_from_args(args))
    if errors:
        for err in errors:
            print(f"pilotsize: {err['field']}: {err['message']}", file=sys.stderr)
        usage = any(e["code"] in _USAGE_CODES for e in errors)
        return 2 if usage else 1
    try:
        resp = api.compute(operation, resolved)
    except (ValueError, ArithmeticError) as exc:
        print(f"pilotsize: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(resp, sort_keys=True))
    else:
        print(_human(resp))
    return 0


def _run_table(args: argparse.Namespace) -> int:
    if args.table_id is None:
        failures = 0
        for table_id in tables.TABLE_IDS:
            try:
                mismatches = tables.diff_against_golden(table_id, args.golden_dir)
            except FileNotFoundError as exc:
                print(f"{table_id}: ERROR {exc}", file=sys.stderr)
                failures += 1
                continue
            if mismatches:
                failures += 1
                print(f"{table_id}: FAIL ({len(mismatches)} mismatching cells)")
                for m in mismatches[:10]:
                    print(f"  row {m.row} col {m.header!r} {m.field}: "
                          f"expected {m.expected}, got {m.actual}")
            else:
                print(f"{table_id}: ok")
        return 1 if failures else 0
    try:
        table_id = tables.resolve_table_id(args.table_id)
    except ValueError as exc:
        print(f"pilotsize: {exc}", file=sys.stderr)
        return 2
    rendered = tables.generate(table_id)
    fmt = "markdown" if args.format == "table" else args.format
    sys.stdout.write(tables.render(rendered, fmt))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command in ("design", "precision", "ci"):
        return _run_request(args.command, args)
    if args.command == "table":
        return _run_table(args)
    from .service import serve
    serve(host=args.host, port=args.port, origins=args.origins)
    return 0


if __name__ == "__main__":
    sys.exit(main())
