"""Command-line front end for analyses, sweeps, and graph exports.

Exit codes follow one convention everywhere: 0 for success with no failed
checks, 1 when some property check failed (the report carries the witness),
2 for usage, build, or input errors. Reports go to stdout unless --out is
given; progress and failure lines go to stderr so piped output stays clean.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from .bundle import build_bundle
from .catalog import default_catalog
from .construct import (
    GroupBuildError,
    GroupSpec,
    build_group,
    format_spec,
    parse_spec,
    save_cayley_file,
)
from .cyclicizer import CyclicGroupError
from .graphs import encode_graph6, to_dot
from .properties import PROPERTY_IDS
from .report import SCHEMA, analyze_bundle, sweep_catalog

_EPILOG = (
    "Environment: NONCYC_BACKEND selects the kernel backend (auto, numba, "
    "numpy); NONCYC_NODE_BUDGET overrides the search node budget."
)


def _write(out: str | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _error_doc(category: str, message: str) -> str:
    doc = {
        "schema": SCHEMA,
        "kind": "error",
        "category": category,
        "message": message,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _source_spec(text: str) -> GroupSpec:
    """A spec string, or a path to a Cayley-table or generator file."""
    if os.path.exists(text):
        with open(text) as fh:
            doc = json.load(fh)
        if not isinstance(doc, dict):
            raise GroupBuildError(f"{text}: expected a JSON object")
        kind = "FromPermGenerators" if "generators" in doc else "FromCayleyFile"
        return GroupSpec(kind, (text,))
    return parse_spec(text)


def _parse_props(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    wanted = tuple(p.strip() for p in text.split(",") if p.strip())
    unknown = [p for p in wanted if p not in PROPERTY_IDS]
    if unknown:
        raise GroupBuildError(f"unknown properties: {', '.join(unknown)}")
    return wanted


def _timeout(value: float) -> float | None:
    return None if value <= 0 else value


def _cmd_analyze(args) -> int:
    spec = _source_spec(args.source)
    props = _parse_props(args.props)
    group = build_group(spec, paranoid=args.paranoid)
    try:
        bundle = build_bundle(group)
    except CyclicGroupError as exc:
        _write(args.out, _error_doc("cyclic-group", str(exc)))
        return 2
    report = analyze_bundle(
        bundle,
        name=args.source,
        spec_text=format_spec(spec),
        property_ids=props,
        timeout=_timeout(args.timeout),
        with_timings=not args.no_timings,
    )
    _write(args.out, report.to_json())
    return 1 if report.fail_count() else 0


def _cmd_sweep(args) -> int:
    props = _parse_props(args.props)
    catalog = default_catalog(args.max_order, include_big=args.big)
    report = sweep_catalog(
        catalog,
        property_ids=props,
        jobs=args.jobs,
        timeout=_timeout(args.timeout),
        paranoid=args.paranoid,
        with_timings=not args.no_timings,
    )
    for fail in report.failures():
        line = f"FAIL {fail['group']} {fail['property']}: "
        line += json.dumps(fail["witness"], sort_keys=True)
        print(line, file=sys.stderr)
    for err in report.errors():
        print(f"ERROR {err['name']}: {err['error']}", file=sys.stderr)
    totals = report.to_dict()["totals"]
    print(
        f"swept {totals['groups']} entries: {totals['analyzed']} analyzed, "
        f"{totals['skipped_cyclic']} cyclic skipped, "
        f"{totals['failures']} failures, {totals['timeouts']} timeouts",
        file=sys.stderr,
    )
    _write(args.out, report.to_json())
    return 0 if report.ok() else 1


def _cmd_export(args) -> int:
    spec = _source_spec(args.source)
    group = build_group(spec, paranoid=args.paranoid)
    try:
        bundle = build_bundle(group)
    except CyclicGroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.target == "noncyclic":
        graph = bundle.noncyclic
    elif args.target == "cyclic":
        graph = bundle.cyclic_graph
    else:
        graph, _ = bundle.noncommuting_graph()
    if args.format == "dot":
        text = to_dot(graph, name=args.target)
    else:
        text = encode_graph6(graph) + "\n"
    _write(args.out, text)
    return 0


def _cmd_catalog_list(args) -> int:
    catalog = default_catalog(args.max_order, include_big=args.big)
    for entry in catalog:
        print(f"{entry.name}\t{entry.order}\t{format_spec(entry.spec)}")
    return 0


def _cmd_import_check(args) -> int:
    if not os.path.exists(args.path):
        print(f"error: no such file: {args.path}", file=sys.stderr)
        return 2
    spec = _source_spec(args.path)
    group = build_group(spec, paranoid=True)
    tmp = tempfile.NamedTemporaryFile(
        mode="w", suffix=".json", prefix="noncyc-roundtrip-", delete=False
    )
    tmp.close()
    try:
        save_cayley_file(group, tmp.name)
        again = build_group(GroupSpec("FromCayleyFile", (tmp.name,)))
    finally:
        os.unlink(tmp.name)
    round_trip = bool(np.array_equal(group.table, again.table))
    doc = {
        "schema": SCHEMA,
        "kind": "import-check",
        "path": args.path,
        "order": group.order,
        "abelian": group.is_abelian,
        "cyclic": group.is_cyclic,
        "exponent": group.exponent,
        "round_trip": round_trip,
    }
    _write(args.out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0 if round_trip else 2


def _report_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--props",
        help="comma-separated property ids to run (default: the full registry)",
    )
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument(
        "--timeout",
        type=float,
        default=120.0,
        help="per-group budget in seconds; 0 disables (default 120)",
    )
    parser.add_argument(
        "--paranoid",
        action="store_true",
        help="re-verify group axioms on every build",
    )
    parser.add_argument(
        "--no-timings",
        action="store_true",
        help="omit wall-clock figures so reports are byte-reproducible",
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="noncyc",
        description="Build non-cyclic graphs of finite groups and verify "
        "their structural invariants.",
        epilog=_EPILOG,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full report for one group")
    pa.add_argument("source", help="group spec, Cayley-table file, or generator file")
    _report_flags(pa)

    ps = sub.add_parser("sweep", help="run the checks across the catalog")
    ps.add_argument("--max-order", type=int, default=100)
    ps.add_argument("--big", action="store_true", help="include SL2/PSL2 entries")
    ps.add_argument("--jobs", type=int, default=1, help="analyze groups in parallel")
    _report_flags(ps)

    pe = sub.add_parser("export", help="write a graph as DOT or graph6")
    pe.add_argument("source")
    pe.add_argument("--format", choices=("dot", "graph6"), default="dot")
    pe.add_argument(
        "--target", choices=("noncyclic", "cyclic", "noncommuting"), default="noncyclic"
    )
    pe.add_argument("--out")
    pe.add_argument("--paranoid", action="store_true")

    pc = sub.add_parser("catalog", help="catalog inspection")
    csub = pc.add_subparsers(dest="catalog_command", required=True)
    cl = csub.add_parser("list", help="print the catalog entries")
    cl.add_argument("--max-order", type=int, default=100)
    cl.add_argument("--big", action="store_true")

    pi = sub.add_parser("import-check", help="validate and round-trip a group file")
    pi.add_argument("path")
    pi.add_argument("--out")

    args = parser.parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "sweep": _cmd_sweep,
        "export": _cmd_export,
        "catalog": _cmd_catalog_list,
        "import-check": _cmd_import_check,
    }
    try:
        return handlers[args.command](args)
    except (GroupBuildError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
