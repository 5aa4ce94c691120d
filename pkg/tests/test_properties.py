"""The property registry: outcomes on known groups, ordering, deadlines."""

import time

import pytest

from noncyc import build_bundle
from noncyc.properties import (
    PROPERTY_IDS,
    GroupAnalysis,
    run_all_properties,
    run_property,
)


def test_registry_shape():
    assert len(PROPERTY_IDS) == 28
    assert len(set(PROPERTY_IDS)) == len(PROPERTY_IDS)
    assert all(pid.startswith("P-") for pid in PROPERTY_IDS)


def test_q8_runs_clean(bundle):
    verdicts = run_all_properties(bundle("Dicyclic(2)"))
    assert len(verdicts) == len(PROPERTY_IDS)
    assert tuple(v.property_id for v in verdicts) == PROPERTY_IDS
    assert all(v.outcome in ("pass", "not-applicable") for v in verdicts)
    skipped = {v.property_id for v in verdicts if v.outcome == "not-applicable"}
    assert skipped == {
        "P-DIAM3-IMPLIES",
        "P-GAMMA-DIHEDRAL-FAMILY",
        "P-SYLOW-CLIQUE",
        "P-PELEMENT-CENTER",
        "P-EXPONENT-P",
        "P-PRODUCT-CLIQUE",
        "P-PSL2-SYLOW",
        "P-A5-31",
        "P-C2F42-DIAMS",
        "P-C6S3-NONEXAMPLE",
    }


def test_run_property_examples(bundle):
    v = run_property(bundle("Dicyclic(2)"), "P-DIAM-QUOTIENT")
    assert v.outcome == "pass"
    v = run_property(
        bundle("DirectProduct(ElementaryAbelian(2,2),Cyclic(3))"),
        "P-CLIQUE3-CHAR",
    )
    assert v.outcome == "pass"
    assert v.witness["omega"] == 3


def test_unknown_property_id(bundle):
    with pytest.raises(KeyError):
        run_property(bundle("Symmetric(3)"), "P-NO-SUCH-THING")
    with pytest.raises(KeyError):
        run_all_properties(bundle("Symmetric(3)"), property_ids=["bogus"])


def test_subset_keeps_registry_order(bundle):
    wanted = ["P-PLANAR-CHAR", "P-CLIQUE-GE3", "P-GAMMA-ONE"]
    verdicts = run_all_properties(bundle("Symmetric(3)"), property_ids=wanted)
    assert [v.property_id for v in verdicts] == [
        "P-GAMMA-ONE",
        "P-CLIQUE-GE3",
        "P-PLANAR-CHAR",
    ]


def test_expired_deadline_times_out(bundle):
    verdicts = run_all_properties(
        bundle("Symmetric(3)"), deadline=time.monotonic() - 1.0
    )
    assert all(v.outcome == "timeout" for v in verdicts)
    assert all(v.witness["reason"] == "group deadline expired" for v in verdicts)


def test_verdict_to_dict(bundle):
    v = run_property(bundle("Symmetric(3)"), "P-CLIQUE-GE3")
    doc = v.to_dict()
    assert set(doc) == {"property", "outcome", "witness", "elapsed_s"}
    assert doc["property"] == "P-CLIQUE-GE3"
    assert doc["outcome"] == "pass"
    assert doc["elapsed_s"] >= 0


def test_clique4_quotient_types(bundle):
    # Clique number 4 occurs for three quotient shapes; all must pass, and a
    # group with a different quotient but omega != 4 is a vacuous pass.
    for spec, tag in [
        ("ElementaryAbelian(3,2)", "Z3xZ3"),
        ("DirectProduct(Cyclic(2),Cyclic(4))", "Z2xZ4"),
        ("DirectProduct(Cyclic(3),Symmetric(3))", "S3"),
    ]:
        v = run_property(bundle(spec), "P-CLIQUE4-CHAR")
        assert v.outcome == "pass", (spec, v.witness)
        if spec != "DirectProduct(Cyclic(3),Symmetric(3))":
            assert v.witness["omega"] == 4
            assert v.witness["quotient_tag"] == tag


def test_diam3_scan_tolerates_reverse_direction(bundle):
    # diam 2 with complement diam 3 is allowed; only the forward direction
    # (diam 3, complement diam below 3) would be a counterexample.
    a = GroupAnalysis(bundle("DirectProduct(Cyclic(6),Cyclic(6))"))
    v = run_property(a, "P-DIAM3-EQUIV-SCAN")
    assert v.outcome == "pass"
    assert v.witness["diameter"] == "2"
    assert v.witness["complement_diameter"] == "3"


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_gamma_dihedral_family(m, bundle):
    # Dihedral groups over an odd rotation half are the model case: one
    # reflection dominates. Even rotation halves fall outside the family.
    v = run_property(bundle(f"Dihedral({m})"), "P-GAMMA-DIHEDRAL-FAMILY")
    assert v.outcome == "pass"
    assert v.witness["abelian_half"] == m


def test_gamma_dihedral_family_skips_even_half(bundle):
    v = run_property(bundle("Dihedral(4)"), "P-GAMMA-DIHEDRAL-FAMILY")
    assert v.outcome == "not-applicable"


def test_special_group_rows(bundle):
    v = run_property(bundle("Alternating(5)"), "P-A5-31")
    assert v.outcome == "pass"
    v = run_property(bundle("Symmetric(3)"), "P-A5-31")
    assert v.outcome == "not-applicable"
    v = run_property(bundle("PSL2(5)"), "P-PSL2-SYLOW")
    assert v.outcome == "pass"
    v = run_property(
        bundle("DirectProduct(Cyclic(2),SemidirectCyclic(7,6,3))"),
        "P-C2F42-DIAMS",
    )
    assert v.outcome == "pass"
    v = run_property(
        bundle("DirectProduct(Cyclic(6),Symmetric(3))"), "P-C6S3-NONEXAMPLE"
    )
    assert v.outcome == "pass"


def test_exponent_p_clique_count(bundle):
    v = run_property(bundle("ElementaryAbelian(3,2)"), "P-EXPONENT-P")
    assert v.outcome == "pass"
    v = run_property(bundle("ElementaryAbelian(2,3)"), "P-EXPONENT-P")
    assert v.outcome == "pass"
    v = run_property(bundle("Symmetric(4)"), "P-EXPONENT-P")
    assert v.outcome == "not-applicable"


def test_planar_char_both_sides(bundle):
    for spec in ("ElementaryAbelian(2,2)", "Symmetric(3)", "Dicyclic(2)"):
        v = run_property(bundle(spec), "P-PLANAR-CHAR")
        assert v.outcome == "pass"
        assert v.witness["planar"] is True
    v = run_property(bundle("Dihedral(4)"), "P-PLANAR-CHAR")
    assert v.outcome == "pass"
    assert v.witness["planar"] is False


def test_analysis_memoizes(bundle):
    a = GroupAnalysis(bundle("Dihedral(6)"))
    assert a.diam() is a.diam()
    assert a.ham() is a.ham()
    assert a.quotient_analysis() is a.quotient_analysis()
