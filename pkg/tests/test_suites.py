"""Suite runner and report plumbing."""

import json

import pytest

from qgl11.suites import SUITE_NAMES, Report, run_suite


def test_unknown_suite_raises():
    with pytest.raises(ValueError):
        run_suite("nonesuch")


def test_report_shape_and_json():
    rep = run_suite("braid")
    assert rep.suite == "braid"
    assert rep.ok
    doc = json.loads(rep.to_json())
    assert doc == rep.to_dict()
    assert [c["status"] for c in doc["checks"]] == ["pass"] * len(doc["checks"])


def test_report_text_marks():
    rep = Report("demo", 2, {}, [("good", "pass", ""), ("bad", "fail", "w")], 3)
    text = rep.to_text()
    assert "PASS  good" in text
    assert "FAIL  bad  [w]" in text
    assert not rep.ok


def test_suite_exception_becomes_error_status():
    rep = run_suite("perk-schultz", order=0, params={"cd_pairs": ((1, 1),)})
    assert not rep.ok
    assert any(s == "error" for _, s, _ in rep.checks)


def test_fixtures_suite_respects_params():
    rep = run_suite("fixtures", order=2, params={"roundtrips": 5})
    assert rep.ok
    assert rep.params["roundtrips"] == 5
    assert any("5 random elements" in n for n, _, _ in rep.checks)


def test_registry_names_all_run():
    assert set(SUITE_NAMES) == {"perk-schultz", "braid", "intertwine",
                                "quasitriangular", "pairing", "hopf", "baxter",
                                "drinfeld-coproduct", "fixtures"}
