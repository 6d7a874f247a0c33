"""Command-line front end.

Subcommands: ringinfo, gw, sumsq, prove, compare, validate, table.
Reports are deterministic byte-for-byte across runs: fixed enumeration
orders, no timestamps, and the version string only appears under
--version.  Exit codes: 0 success, 1 input or usage error (diagnostics on
stderr), 2 the prover returned Unknown.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__, kmwterm, termparse
from .finring import RingError, make_ring
from .gwring import PresentationKind, compare_presentations, present
from .qform import QformError, cross_validate
from .sumsq import unit_square_closure
from .termparse import ParseError

TABLE_COLUMNS = [
    "ring",
    "n_units",
    "minus_one_exponent",
    "hopf_rank",
    "hopf_torsion",
    "reduced_rank",
    "reduced_torsion",
    "plus_rank",
    "minus_rank",
    "comparison",
]

TABLE_METRICS = {
    "units": ["n_units"],
    "sumsq": ["minus_one_exponent"],
    "gw": ["hopf_rank", "hopf_torsion", "reduced_rank", "reduced_torsion"],
    "split": ["plus_rank", "minus_rank"],
    "compare": ["comparison"],
}


def _flatten(value):
    if isinstance(value, (list, tuple)):
        return "|".join(str(v) for v in value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit_scalar(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        flat = {k: _flatten(v) for k, v in report.items() if not isinstance(v, dict)}
        for k, v in report.items():
            if isinstance(v, dict):
                for kk, vv in v.items():
                    flat[f"{k}.{kk}"] = _flatten(vv)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(flat.keys())
        writer.writerow(flat.values())
        return buf.getvalue()
    lines = ["| key | value |", "| --- | --- |"]
    for k, v in report.items():
        if isinstance(v, dict):
            for kk, vv in v.items():
                lines.append(f"| {k}.{kk} | {_flatten(vv)} |")
        else:
            lines.append(f"| {k} | {_flatten(v)} |")
    return "\n".join(lines) + "\n"


def _emit_rows(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_flatten(row.get(c)) for c in columns])
        return buf.getvalue()
    lines = ["| " + " | ".join(columns) + " |",
             "| " + " | ".join("---" for _ in columns) + " |"]
    for row in rows:
        lines.append("| " + " | ".join(_flatten(row.get(c)) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def cmd_ringinfo(args) -> tuple[int, str]:
    ring = make_ring(args.ring)
    report = {
        "ring": ring.spec_string(),
        "cardinality": ring.card,
        "characteristic": ring.characteristic(),
        "n_units": len(ring.units()),
        "units": [str(u) for u in ring.units()],
        "unit_squares": sorted(str(u) for u in ring.unit_squares()),
    }
    return 0, _emit_scalar(report, args.out)


def cmd_gw(args) -> tuple[int, str]:
    ring = make_ring(args.ring)
    report = present(ring, PresentationKind.coerce(args.kind)).report()
    return 0, _emit_scalar(report, args.out)


def cmd_sumsq(args) -> tuple[int, str]:
    report = unit_square_closure(make_ring(args.ring)).to_json()
    return 0, _emit_scalar(report, args.out)


def cmd_compare(args) -> tuple[int, str]:
    report = compare_presentations(make_ring(args.ring)).to_json()
    return 0, _emit_scalar(report, args.out)


def cmd_validate(args) -> tuple[int, str]:
    report = cross_validate(make_ring(args.ring)).to_json()
    return 0, _emit_scalar(report, args.out)


def cmd_prove(args) -> tuple[int, str]:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = args.identity
    if text is None:
        raise ParseError("no identity given (positional argument or --file)", 1, 1)
    hints = tuple(termparse.parse_unit(h) for h in _split_list(args.hints))
    identity = termparse.parse_identity(text, args.hyp or "")
    config = kmwterm.ProveConfig(
        max_depth=args.depth,
        max_term_words=args.max_words,
        hint_units=hints,
    )
    proof = kmwterm.prove(identity, args.mode, config)
    base = {
        "identity": str(identity),
        "mode": args.mode,
        "hypotheses": [kmwterm.render_unit(h) for h in identity.hypotheses],
    }
    if proof is None:
        base["status"] = "unknown"
        return 2, _emit_scalar(base, args.out)
    check = kmwterm.check_proof(proof)
    base["status"] = "proved"
    base["checked"] = bool(check)
    base["n_steps"] = len(proof.steps)
    if args.out == "json":
        base["steps"] = proof.to_json()
    return 0, _emit_scalar(base, args.out)


def _split_list(text) -> list[str]:
    if not text:
        return []
    return [part.strip() for part in text.split(",") if part.strip()]


def _table_row(spec: str, metrics: list[str]) -> dict:
    row = {"ring": spec}
    try:
        ring = make_ring(spec)
        row["ring"] = ring.spec_string()
        if "n_units" in metrics:
            row["n_units"] = len(ring.units())
        if "minus_one_exponent" in metrics:
            closure = unit_square_closure(ring)
            row["minus_one_exponent"] = closure.exponent(ring.minus_one())
        gw_cols = {"hopf_rank", "hopf_torsion", "reduced_rank", "reduced_torsion",
                   "plus_rank", "minus_rank"}
        if gw_cols & set(metrics):
            reduced = present(ring, PresentationKind.REDUCED)
            if "hopf_rank" in metrics or "hopf_torsion" in metrics:
                hopf = present(ring, PresentationKind.HOPF)
                row["hopf_rank"] = hopf.rank
                row["hopf_torsion"] = list(hopf.torsion)
            row["reduced_rank"] = reduced.rank
            row["reduced_torsion"] = list(reduced.torsion)
            if "plus_rank" in metrics or "minus_rank" in metrics:
                split = reduced.invert_two_split()
                row["plus_rank"] = split.plus_rank
                row["minus_rank"] = split.minus_rank
        if "comparison" in metrics:
            row["comparison"] = compare_presentations(ring).extra_relations_implied
    except (RingError, QformError, ValueError) as exc:
        row["error"] = str(exc)
    return row


def cmd_table(args) -> tuple[int, str]:
    specs = []
    if args.family:
        with open(args.family, encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    specs.append(line)
    if args.ring:
        specs.append(args.ring)
    if not specs:
        raise RingError("table needs --family FILE or --ring SPEC")
    metric_names = _split_list(args.metrics) or list(TABLE_METRICS)
    metrics: list[str] = []
    for name in metric_names:
        if name not in TABLE_METRICS:
            raise RingError(f"unknown metric {name!r}; choose from {sorted(TABLE_METRICS)}")
        metrics.extend(TABLE_METRICS[name])
    columns = ["ring"] + [c for c in TABLE_COLUMNS[1:] if c in metrics]
    with ThreadPoolExecutor(max_workers=min(8, len(specs))) as pool:
        rows = list(pool.map(lambda s: _table_row(s, metrics), specs))
    failed = any("error" in row for row in rows)
    if failed:
        columns = columns + ["error"]
    return (1 if failed else 0), _emit_rows(rows, columns, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mwkit",
        description="Symbol relations, presented rings and unit sums of squares over finite rings.",
    )
    parser.add_argument("--version", action="version", version=f"mwkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", choices=["json", "csv", "markdown"], default="json")

    p = sub.add_parser("ringinfo", help="cardinality, units and unit squares of a ring")
    p.add_argument("--ring", required=True)
    add_out(p)
    p.set_defaults(func=cmd_ringinfo)

    p = sub.add_parser("gw", help="present Z[R^x]/I and report its invariants")
    p.add_argument("--ring", required=True)
    p.add_argument("--kind", choices=["hopf", "reduced"], default="reduced")
    add_out(p)
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("sumsq", help="unit sum-of-squares exponents by fixpoint")
    p.add_argument("--ring", required=True)
    add_out(p)
    p.set_defaults(func=cmd_sumsq)

    p = sub.add_parser("prove", help="search for a rewrite certificate for an identity")
    p.add_argument("identity", nargs="?", help="identity like '<a>+<-a> = <1>+<-1>'")
    p.add_argument("--file", help="read the identity from a file instead")
    p.add_argument("--mode", choices=["hopf", "hopf-steinberg", "reduced"], default="hopf")
    p.add_argument("--hyp", default="", help="hypotheses, e.g. 'unit(a),unit(1-a)'")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--max-words", type=int, default=16, dest="max_words")
    p.add_argument("--hints", default="", help="comma-separated extra unit expressions")
    add_out(p)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("compare", help="do the hopf relations imply the reduced ones?")
    p.add_argument("--ring", required=True)
    add_out(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("validate", help="cross-validate a field against the form oracle")
    p.add_argument("--ring", required=True)
    add_out(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("table", help="batch report over a family of rings")
    p.add_argument("--family", help="file with one ring spec per line (# comments)")
    p.add_argument("--ring", help="single extra ring spec")
    p.add_argument("--metrics", default="", help=f"subset of {sorted(TABLE_METRICS)}")
    add_out(p)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except (RingError, QformError, ParseError, kmwterm.IdentityError,
            kmwterm.UnitExprError, kmwterm.EvalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return code


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
