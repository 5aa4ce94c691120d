"""Structured result documents for single analyses and catalog sweeps.

Every run serializes to one JSON document with a schema tag, sorted keys,
and a trailing newline, so identical inputs produce byte-identical output.
Wall-clock figures are attached only when requested; leaving them out keeps
the document reproducible across machines.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from .bundle import GroupGraphBundle
from .catalog import Catalog
from .construct import build_group, format_spec, parse_spec
from .graphs import CliqueBudgetError, diameter, domination_number, hamiltonian_cycle
from .planarity import is_planar
from .properties import Verdict, run_all_properties

SCHEMA = "noncyc-report/1"

COVERAGE_NOTE = (
    "Sweeps cover the constructible catalog families (cyclic, abelian "
    "products, dihedral, dicyclic, symmetric, alternating, semidirect and "
    "direct products, plus the optional SL2/PSL2 entries), not every "
    "isomorphism type of each order; other groups enter through Cayley-table "
    "or permutation-generator files."
)

DOMINATION_CAP = 3


def _verdict_dicts(verdicts: tuple[Verdict, ...], with_timings: bool) -> list[dict]:
    out = []
    for v in verdicts:
        d = v.to_dict()
        if not with_timings:
            d.pop("elapsed_s")
        out.append(d)
    return out


@dataclass(frozen=True)
class AnalysisReport:
    name: str
    spec_text: str | None
    order: int
    cyc_order: int
    quotient_order: int
    invariants: dict[str, Any]
    verdicts: tuple[Verdict, ...]
    with_timings: bool
    elapsed: float

    def fail_count(self) -> int:
        return sum(1 for v in self.verdicts if v.outcome == "fail")

    def to_dict(self) -> dict:
        doc = {
            "schema": SCHEMA,
            "kind": "analysis",
            "group": {
                "name": self.name,
                "spec": self.spec_text,
                "order": self.order,
                "cyclicizer_order": self.cyc_order,
                "quotient_order": self.quotient_order,
            },
            "invariants": self.invariants,
            "verdicts": _verdict_dicts(self.verdicts, self.with_timings),
        }
        if self.with_timings:
            doc["elapsed_s"] = round(self.elapsed, 6)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _graph_invariants(bundle: GroupGraphBundle) -> dict[str, Any]:
    inv: dict[str, Any] = {}
    try:
        info = bundle.clique_data()
        inv["omega"] = info.omega
        inv["omega_method"] = info.method
        inv["maximal_cyclic_subgroups"] = info.maximal_count
    except CliqueBudgetError:
        inv["omega"] = None
        inv["omega_method"] = "budget-exhausted"
        inv["maximal_cyclic_subgroups"] = bundle.maximal_cyclic_witness()[0]
    inv["diameter"] = diameter(bundle.noncyclic).to_dict()
    inv["complement_diameter"] = diameter(bundle.cyclic_graph).to_dict()
    dom = domination_number(bundle.noncyclic, cap=DOMINATION_CAP)
    cdom = domination_number(bundle.cyclic_graph, cap=DOMINATION_CAP)
    inv["domination"] = {"value": dom.value, "cap": DOMINATION_CAP}
    inv["complement_domination"] = {"value": cdom.value, "cap": DOMINATION_CAP}
    planar = is_planar(bundle.noncyclic)
    inv["planar"] = planar.planar
    inv["planarity_certificate"] = planar.kind
    ham = hamiltonian_cycle(bundle.noncyclic)
    inv["hamiltonian"] = None if ham.status == "timeout" else ham.status == "found"
    return inv


def analyze_bundle(
    bundle: GroupGraphBundle,
    name: str,
    spec_text: str | None = None,
    property_ids: tuple[str, ...] | list[str] | None = None,
    timeout: float | None = None,
    with_timings: bool = True,
) -> AnalysisReport:
    start = time.perf_counter()
    deadline = None if timeout is None else time.monotonic() + timeout
    invariants = _graph_invariants(bundle)
    verdicts = run_all_properties(bundle, property_ids, deadline)
    return AnalysisReport(
        name=name,
        spec_text=spec_text,
        order=bundle.group.order,
        cyc_order=bundle.cyc_data.cyc.size,
        quotient_order=bundle.cyc_data.quotient.order,
        invariants=invariants,
        verdicts=verdicts,
        with_timings=with_timings,
        elapsed=time.perf_counter() - start,
    )


def _sweep_entry(args: tuple) -> dict:
    name, spec_text, props, timeout, paranoid, with_timings = args
    start = time.perf_counter()
    row: dict[str, Any] = {"name": name, "spec": spec_text}
    try:
        group = build_group(parse_spec(spec_text), paranoid=paranoid)
        row["order"] = group.order
        if group.is_cyclic:
            row["status"] = "skipped_cyclic"
            return row
        report = analyze_bundle(
            GroupGraphBundle(group),
            name,
            spec_text,
            property_ids=props,
            timeout=timeout,
            with_timings=with_timings,
        )
    except Exception as exc:  # a broken build must not sink the whole sweep
        row["status"] = "error"
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    counts = {"pass": 0, "fail": 0, "not-applicable": 0, "timeout": 0}
    for v in report.verdicts:
        counts[v.outcome] += 1
    row["status"] = "analyzed"
    row["cyclicizer_order"] = report.cyc_order
    row["counts"] = counts
    row["invariants"] = report.invariants
    row["verdicts"] = _verdict_dicts(report.verdicts, with_timings)
    if with_timings:
        row["elapsed_s"] = round(time.perf_counter() - start, 6)
    return row


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[dict, ...]
    max_order: int
    include_big: bool
    property_ids: tuple[str, ...] | None
    with_timings: bool
    elapsed: float

    def failures(self) -> list[dict]:
        out = []
        for row in self.rows:
            for v in row.get("verdicts", ()):
                if v["outcome"] == "fail":
                    out.append({"group": row["name"], **v})
        return out

    def errors(self) -> list[dict]:
        return [r for r in self.rows if r["status"] == "error"]

    def ok(self) -> bool:
        return not self.failures() and not self.errors()

    def to_dict(self) -> dict:
        totals = {
            "groups": len(self.rows),
            "analyzed": sum(1 for r in self.rows if r["status"] == "analyzed"),
            "skipped_cyclic": sum(
                1 for r in self.rows if r["status"] == "skipped_cyclic"
            ),
            "errors": len(self.errors()),
            "failures": len(self.failures()),
            "timeouts": sum(
                r.get("counts", {}).get("timeout", 0) for r in self.rows
            ),
        }
        doc = {
            "schema": SCHEMA,
            "kind": "sweep",
            "coverage": COVERAGE_NOTE,
            "parameters": {
                "max_order": self.max_order,
                "include_big": self.include_big,
                "properties": list(self.property_ids) if self.property_ids else "all",
            },
            "totals": totals,
            "groups": list(self.rows),
        }
        if self.with_timings:
            doc["elapsed_s"] = round(self.elapsed, 6)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def sweep_catalog(
    catalog: Catalog,
    property_ids: tuple[str, ...] | list[str] | None = None,
    jobs: int = 1,
    timeout: float | None = 120.0,
    paranoid: bool = False,
    with_timings: bool = True,
) -> SweepReport:
    """Analyze every catalog entry, in order, optionally across processes."""
    start = time.perf_counter()
    props = tuple(property_ids) if property_ids else None
    tasks = [
        (e.name, format_spec(e.spec), props, timeout, paranoid, with_timings)
        for e in catalog
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = tuple(pool.map(_sweep_entry, tasks))
    else:
        rows = tuple(_sweep_entry(t) for t in tasks)
    return SweepReport(
        rows=rows,
        max_order=catalog.max_order,
        include_big=catalog.include_big,
        property_ids=props,
        with_timings=with_timings,
        elapsed=time.perf_counter() - start,
    )
