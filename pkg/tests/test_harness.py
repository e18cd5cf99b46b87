import json

import pytest

from grouplab.harness import (
    ALL_CLAIMS,
    CLAIM_STATEMENTS,
    FAILS,
    HOLDS,
    CatalogEntry,
    ClaimResult,
    blocking_failures,
    check_expected,
    check_product_pair,
    counterexample_scan,
    load_catalog,
    open_conjecture_counterexamples,
    run_claims,
    run_entry,
)
from grouplab.constructions import realize
from grouplab.properties import classify


def test_catalog_is_large_and_self_consistent(catalog):
    assert len(catalog) >= 30
    assert len({e.name for e in catalog}) == len(catalog)
    for e in catalog:
        assert set(e.expected) <= set(e.provenance)
        assert check_expected(e, classify(realize(e.spec), e.name)) == []


def test_every_claim_has_a_statement():
    assert set(CLAIM_STATEMENTS) == set(ALL_CLAIMS)


def test_entry_requires_provenance():
    with pytest.raises(ValueError):
        CatalogEntry("X", "C2", {"order": 2}, {})


def test_failure_requires_witness():
    with pytest.raises(ValueError):
        ClaimResult("C1", "X", FAILS)


def test_bad_catalog_line_reports_line_number(tmp_path):
    p = tmp_path / "bad.jsonl"
    p.write_text('{"name": "C2", "spec": "C2"}\n{"name": "oops", "spec": "C4 x"}\n')
    with pytest.raises(ValueError, match=":2:"):
        load_catalog(p)


def test_claim_on_32_2_group():
    entry = CatalogEntry("(32,2)", "sd(C4 x C2, C4, [[1,0],[1,1]])")
    results = {r.claim_id: r for r in run_entry(entry, ["C3", "C1", "C23"])}
    assert results["C3"].verdict == HOLDS


def test_product_pair():
    r = check_product_pair(("Q8", "Q8"), ("C3", "C3"))
    assert r.verdict == HOLDS
    assert check_product_pair(("Q8", "Q8"), ("A5", "A5")).verdict == FAILS
    assert check_product_pair(("A5", "A5"), ("SL2(5)", "SL2(5)")) is None


def test_filtered_run_is_sorted_and_green(catalog):
    results = run_claims(catalog, ["C16", "C17"])
    assert results == sorted(results, key=lambda r: (int(r.claim_id[1:]), r.group))
    assert {r.claim_id for r in results} <= {"C16", "C17"}
    assert not blocking_failures(results)


def test_unknown_claim():
    with pytest.raises(ValueError):
        run_claims([], ["C99"])


def test_open_claims_never_block():
    r = ClaimResult("C23", "X", FAILS, {"center_order": 1})
    assert blocking_failures([r]) == [] and open_conjecture_counterexamples([r]) == [r]


def test_parallel_matches_serial(catalog):
    small = catalog[:8]
    a = run_claims(small, ["C1", "C9", "C16"], parallelism=1)
    b = run_claims(small, ["C1", "C9", "C16"], parallelism=2)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]


def test_scan_survey():
    results, observations, survey = counterexample_scan(40, ["metacyclic", "dihedral", "rank2"])
    assert not [r for r in results if r.verdict == FAILS]
    assert {row["family"] for row in survey} == {"metacyclic", "dihedral", "rank2"}
    assert json.dumps(survey)
    assert all(o.order <= 40 for o in observations if o.family != "dihedral")
    # D_n is POEC only for n = 2, never in range
    assert not any(o.poec for o in observations if o.family == "dihedral")
