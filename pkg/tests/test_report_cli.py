"""Report documents, the catalog roster, and the command-line front end."""

import json

import pytest

from noncyc import build_bundle
from noncyc.catalog import default_catalog
from noncyc.cli import main
from noncyc.properties import PROPERTY_IDS, Verdict
from noncyc.report import SCHEMA, AnalysisReport, SweepReport, analyze_bundle, sweep_catalog


def test_analysis_report_shape(bundle):
    report = analyze_bundle(bundle("Dicyclic(2)"), "Q8", "Dicyclic(2)")
    doc = report.to_dict()
    assert doc["schema"] == SCHEMA
    assert doc["kind"] == "analysis"
    assert doc["group"] == {
        "name": "Q8",
        "spec": "Dicyclic(2)",
        "order": 8,
        "cyclicizer_order": 2,
        "quotient_order": 4,
    }
    inv = doc["invariants"]
    assert inv["omega"] == 3
    assert inv["omega_method"] == "search"
    assert inv["maximal_cyclic_subgroups"] == 3
    assert inv["diameter"] == {"kind": "finite", "value": 2}
    assert inv["complement_diameter"] == {"kind": "infinite"}
    assert inv["planar"] is True
    assert inv["hamiltonian"] is True
    assert len(doc["verdicts"]) == len(PROPERTY_IDS)
    assert report.fail_count() == 0
    assert "elapsed_s" in doc
    assert all("elapsed_s" in v for v in doc["verdicts"])


def test_timings_can_be_left_out(bundle):
    report = analyze_bundle(
        bundle("Symmetric(3)"), "S3", "Symmetric(3)", with_timings=False
    )
    doc = report.to_dict()
    assert "elapsed_s" not in doc
    assert all("elapsed_s" not in v for v in doc["verdicts"])
    text = report.to_json()
    assert text.endswith("\n")
    assert json.loads(text) == doc


def test_reports_are_reproducible_without_timings():
    docs = []
    for _ in range(2):
        b = build_bundle("Dihedral(6)")
        docs.append(
            analyze_bundle(b, "D12", "Dihedral(6)", with_timings=False).to_json()
        )
    assert docs[0] == docs[1]


def test_fail_count_counts_failures():
    verdicts = (
        Verdict("A", "pass", {}, 0.0),
        Verdict("B", "fail", {"x": 1}, 0.0),
        Verdict("C", "not-applicable", {}, 0.0),
        Verdict("D", "fail", {}, 0.0),
    )
    report = AnalysisReport(
        name="synthetic",
        spec_text=None,
        order=8,
        cyc_order=1,
        quotient_order=8,
        invariants={},
        verdicts=verdicts,
        with_timings=False,
        elapsed=0.0,
    )
    assert report.fail_count() == 2


def test_sweep_report_bookkeeping():
    rows = (
        {"name": "a", "status": "skipped_cyclic"},
        {
            "name": "b",
            "status": "analyzed",
            "counts": {"pass": 1, "fail": 1, "not-applicable": 0, "timeout": 2},
            "verdicts": [
                {"property": "P-X", "outcome": "pass", "witness": {}},
                {"property": "P-Y", "outcome": "fail", "witness": {"w": 1}},
            ],
        },
        {"name": "c", "status": "error", "error": "boom"},
    )
    report = SweepReport(
        rows=rows,
        max_order=10,
        include_big=False,
        property_ids=None,
        with_timings=False,
        elapsed=0.0,
    )
    assert not report.ok()
    assert report.failures() == [
        {"group": "b", "property": "P-Y", "outcome": "fail", "witness": {"w": 1}}
    ]
    assert [e["name"] for e in report.errors()] == ["c"]
    totals = report.to_dict()["totals"]
    assert totals == {
        "groups": 3,
        "analyzed": 1,
        "skipped_cyclic": 1,
        "errors": 1,
        "failures": 1,
        "timeouts": 2,
    }


def test_small_sweep_is_clean():
    report = sweep_catalog(default_catalog(16), with_timings=False)
    assert report.ok()
    doc = report.to_dict()
    assert doc["kind"] == "sweep"
    assert doc["parameters"] == {
        "max_order": 16,
        "include_big": False,
        "properties": "all",
    }
    totals = doc["totals"]
    assert totals["failures"] == 0
    assert totals["errors"] == 0
    assert totals["timeouts"] == 0
    assert totals["groups"] == totals["analyzed"] + totals["skipped_cyclic"]
    # cyclic entries come first and every one is skipped
    for row in doc["groups"]:
        if row["name"].startswith("Z") and "x" not in row["name"]:
            assert row["status"] == "skipped_cyclic"
        else:
            assert row["status"] == "analyzed"


def test_sweep_respects_property_subset():
    report = sweep_catalog(
        default_catalog(8), property_ids=["P-CLIQUE-GE3"], with_timings=False
    )
    for row in report.rows:
        if row["status"] == "analyzed":
            assert [v["property"] for v in row["verdicts"]] == ["P-CLIQUE-GE3"]


def test_catalog_roster():
    cat = default_catalog(8)
    names = cat.names()
    assert len(set(names)) == len(names)
    for want in ("Z2xZ2", "Z2xZ2xZ2", "Z2xZ4", "D8", "Q8", "S3"):
        assert want in names
    assert "A4" not in names
    assert cat.get("Q8").order == 8
    with pytest.raises(KeyError):
        cat.get("missing")
    twelve = default_catalog(12).names()
    for want in ("A4", "D12", "Dic3"):
        assert want in twelve
    big = default_catalog(60, include_big=True).names()
    assert "A5" in big and "PSL2(7)" in big
    with pytest.raises(ValueError):
        default_catalog(3)


def test_catalog_ordering():
    cat = default_catalog(20)
    entries = list(cat)
    cyclics = [e for e in entries if e.spec.kind == "Cyclic"]
    assert entries[: len(cyclics)] == cyclics
    rest = entries[len(cyclics):]
    assert rest == sorted(rest, key=lambda e: (e.order, e.name))
    assert all(e.order <= 20 for e in entries)


# ---------------------------------------------------------------------------
# the command line


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_analyze_dihedral(capsys):
    code, out, _ = run_cli(capsys, "analyze", "Dihedral(4)", "--no-timings")
    assert code == 0
    doc = json.loads(out)
    assert doc["invariants"]["omega"] == 5
    assert doc["invariants"]["planar"] is False
    assert doc["group"]["order"] == 8


def test_cli_analyze_q8(capsys):
    code, out, _ = run_cli(capsys, "analyze", "Dicyclic(2)", "--no-timings")
    assert code == 0
    doc = json.loads(out)
    assert doc["invariants"]["omega"] == 3
    assert doc["invariants"]["planar"] is True
    assert doc["group"]["cyclicizer_order"] == 2


def test_cli_analyze_cyclic_group_is_structured_error(capsys):
    code, out, _ = run_cli(capsys, "analyze", "Cyclic(12)")
    assert code == 2
    doc = json.loads(out)
    assert doc["kind"] == "error"
    assert doc["category"] == "cyclic-group"


def test_cli_analyze_bad_spec(capsys):
    code, _, err = run_cli(capsys, "analyze", "Nonsense(3)")
    assert code == 2
    assert "error:" in err


def test_cli_analyze_unknown_property(capsys):
    code, _, err = run_cli(capsys, "analyze", "Symmetric(3)", "--props", "P-TYPO")
    assert code == 2
    assert "unknown properties" in err


def test_cli_analyze_out_file_and_determinism(capsys, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert run_cli(capsys, "analyze", "Dihedral(6)", "--no-timings", "--out", a)[0] == 0
    assert run_cli(capsys, "analyze", "Dihedral(6)", "--no-timings", "--out", b)[0] == 0
    with open(a, "rb") as fa, open(b, "rb") as fb:
        assert fa.read() == fb.read()


def test_cli_analyze_props_subset(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "Symmetric(3)",
        "--props", "P-CLIQUE-GE3,P-PLANAR-CHAR", "--no-timings",
    )
    assert code == 0
    doc = json.loads(out)
    assert [v["property"] for v in doc["verdicts"]] == [
        "P-CLIQUE-GE3", "P-PLANAR-CHAR",
    ]


def test_cli_export_graph6(capsys):
    code, out, _ = run_cli(
        capsys, "export", "ElementaryAbelian(2,2)", "--format", "graph6"
    )
    assert code == 0
    assert out == "Bw\n"


def test_cli_export_dot(capsys):
    code, out, _ = run_cli(capsys, "export", "Symmetric(3)", "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'graph "noncyclic" {'
    assert sum(1 for ln in lines if "[label=" in ln) == 5
    assert out.endswith("}\n")


def test_cli_export_cyclic_target(capsys):
    code, out, _ = run_cli(
        capsys, "export", "Dicyclic(2)", "--target", "cyclic", "--format", "dot"
    )
    assert code == 0
    assert out.startswith('graph "cyclic" {')


def test_cli_export_rejects_cyclic_group(capsys):
    code, _, err = run_cli(capsys, "export", "Cyclic(5)")
    assert code == 2
    assert "error:" in err


def test_cli_catalog_list(capsys):
    code, out, _ = run_cli(capsys, "catalog", "list", "--max-order", "8")
    assert code == 0
    names = [line.split("\t")[0] for line in out.splitlines()]
    for want in ("Z2xZ2", "Z2xZ2xZ2", "Z2xZ4", "D8", "Q8", "S3"):
        assert want in names
    assert "A4" not in names


def test_cli_catalog_list_rejects_tiny_order(capsys):
    code, _, err = run_cli(capsys, "catalog", "list", "--max-order", "3")
    assert code == 2
    assert "error:" in err


def test_cli_import_check_round_trip(capsys, tmp_path):
    from noncyc.construct import build_group, save_cayley_file

    path = str(tmp_path / "s3.json")
    save_cayley_file(build_group("Symmetric(3)"), path)
    code, out, _ = run_cli(capsys, "import-check", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "import-check"
    assert doc["order"] == 6
    assert doc["round_trip"] is True
    assert doc["cyclic"] is False


def test_cli_import_check_missing_file(capsys):
    code, _, err = run_cli(capsys, "import-check", "/no/such/file.json")
    assert code == 2
    assert "no such file" in err


def test_cli_analyze_accepts_cayley_file(capsys, tmp_path):
    from noncyc.construct import build_group, save_cayley_file

    path = str(tmp_path / "d8.json")
    save_cayley_file(build_group("Dihedral(4)"), path)
    code, out, _ = run_cli(capsys, "analyze", path, "--no-timings")
    assert code == 0
    doc = json.loads(out)
    assert doc["invariants"]["omega"] == 5


def test_cli_sweep_small(capsys, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    for path in (a, b):
        code, _, err = run_cli(
            capsys, "sweep", "--max-order", "12", "--no-timings", "--out", path
        )
        assert code == 0
        assert "0 failures" in err
    with open(a, "rb") as fa, open(b, "rb") as fb:
        doc = json.loads(fa.read().decode())
        fa.seek(0)
        assert fa.read() == fb.read()
    assert doc["totals"]["failures"] == 0
    assert doc["totals"]["errors"] == 0
