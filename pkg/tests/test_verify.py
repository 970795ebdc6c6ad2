"""The consistency suite itself: green on the real build, red on a sabotaged
one, deterministic, and schema-stable."""

from __future__ import annotations

import json

import pytest

from genocchi import models, verify
from genocchi.verify import ORDER3_CELLS, count_matrix, run_suite


def test_count_matrix_order_one():
    report = count_matrix(1)
    assert report.totals == {m: 1 for m in models.MODEL_NAMES}
    assert all(h == (1,) for h in report.k_hists.values())
    assert all(h == (1,) for h in report.l_hists.values())
    assert report.passed


def test_count_matrix_order_three():
    report = count_matrix(3)
    assert report.triangle_row == (2, 3, 2)
    for model in models.MODEL_NAMES:
        assert report.totals[model] == 7
        assert report.k_hists[model] == (2, 3, 2)
        assert report.l_hists[model] == (2, 3, 2)
    assert report.passed


def test_order3_reference_is_total():
    for model, cells in ORDER3_CELLS.items():
        assert len(cells) == 7, model
        assert (1, 1) not in cells and (3, 3) not in cells
        for text in cells.values():
            models.parse(model, text)  # every reference entry is well formed


def test_suite_passes_at_small_bounds():
    report = run_suite(3, 2, identity_n=12, divisibility_n=30)
    assert report.passed
    assert not report.failures()
    assert report.to_text().endswith("overall: PASS")


def test_suite_is_deterministic_and_thread_count_invariant():
    base = run_suite(3, 2, identity_n=10, divisibility_n=10)
    again = run_suite(3, 2, identity_n=10, divisibility_n=10)
    threaded = run_suite(3, 2, identity_n=10, divisibility_n=10, threads=4)
    assert base.to_json() == again.to_json() == threaded.to_json()


def test_json_records_schema():
    report = run_suite(2, 1, identity_n=8, divisibility_n=8)
    records = json.loads(report.to_json())
    assert isinstance(records, list) and records
    seen_models = set()
    for record in records:
        assert set(record) == {"n", "model", "total", "k_hist", "l_hist", "checks"}
        seen_models.add(record["model"])
        for check in record["checks"]:
            assert set(check) == {"name", "status", "witness"}
            assert check["status"] in ("pass", "fail")
            if check["status"] == "pass":
                assert check["witness"] is None
    assert seen_models >= set(models.MODEL_NAMES) | {"triangles"}
    model_rows = [r for r in records if r["n"] == 2 and r["model"] == "pd2n"]
    assert model_rows and model_rows[0]["total"] == 2
    assert model_rows[0]["k_hist"] == [1, 1]


def literal_redundant_positions(m):
    # uncorrected variant: treats the top position like all the others
    chain = models.redundancy_chain(m)
    out = set()
    for l in range(chain[-1], m.n + 1):
        anchor = max(c for c in chain if c <= l)
        if anchor in m.pairs[l - 1]:
            out.add(l)
    return frozenset(out)


def test_suite_catches_the_uncorrected_redundancy_rule(monkeypatch):
    monkeypatch.setattr(models, "redundant_positions", literal_redundant_positions)
    report = run_suite(3, 0, identity_n=8, divisibility_n=8)
    assert not report.passed
    transport = [
        c for c in report.failures()
        if c.name == "redundancy-transport" and c.n == 3
    ]
    assert transport, "the transport check must be the one that fires"
    assert "1,1;1,2;1,3" in transport[0].witness
    # failure is reported, not raised, and the text names the witness
    assert "redundancy-transport" in report.to_text()


def test_failed_check_appears_in_text_and_csv_friendly_fields(monkeypatch):
    monkeypatch.setattr(models, "redundant_positions", literal_redundant_positions)
    report = run_suite(3, 0, identity_n=8, divisibility_n=8)
    for check in report.failures():
        assert check.witness, check.name
        assert check.status == "fail"
    assert report.to_text().endswith("overall: FAIL")


def test_pair_count_bound_is_honored():
    report = run_suite(2, 2, identity_n=8, divisibility_n=8)
    names = [c.name for c in report.checks]
    assert names.count("pair-count") == 2
    skipped = run_suite(2, 0, identity_n=8, divisibility_n=8)
    assert "pair-count" not in [c.name for c in skipped.checks]


def test_verify_module_exports():
    assert verify.Check("x", "suite", None, "pass").ok
    assert not verify.Check("x", "suite", 1, "fail", "w").ok
