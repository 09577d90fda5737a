"""Reproduction registry: suite coverage, report shape, determinism."""

import pytest

from simplexcut.reproduce import (
    CRITERIA,
    PROVENANCES,
    SUITES,
    CheckResult,
    RunReport,
    run_criterion,
    run_suite,
)

CHECK_FIELDS = {
    "id",
    "criterion",
    "description",
    "expected",
    "computed",
    "tolerance",
    "regime",
    "provenance",
    "passed",
    "elapsed_s",
}


def test_suites_cover_all_criteria():
    assert SUITES["all"] == CRITERIA
    from_suites = set()
    for name, members in SUITES.items():
        if name != "all":
            from_suites.update(members)
    assert from_suites == set(CRITERIA)


def test_non_overlapping_suites():
    named = [set(SUITES[s]) for s in ("constants", "lemmas", "enumeration")]
    assert named[0] & named[1] == set()
    assert named[0] & named[2] == set()
    assert named[1] & named[2] == set()


@pytest.mark.parametrize("criterion", CRITERIA)
def test_each_criterion_runs_clean(criterion):
    checks = run_criterion(criterion)
    assert checks, criterion
    for check in checks:
        assert isinstance(check, CheckResult)
        assert check.criterion == criterion
        assert check.provenance in PROVENANCES
        assert check.passed, f"{check.id}: {check.computed} != {check.expected}"
        assert set(check.as_dict()) == CHECK_FIELDS


def test_check_ids_unique_across_registry():
    ids = [c.id for name in CRITERIA for c in run_criterion(name)]
    assert len(ids) == len(set(ids))


def test_run_criterion_rejects_unknown():
    with pytest.raises(ValueError, match="unknown criterion"):
        run_criterion("nope")


def test_run_suite_rejects_unknown():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nope")
    with pytest.raises(ValueError, match="threads"):
        run_suite("constants", threads=0)


def test_run_suite_report_shape():
    report = run_suite("lemmas")
    assert isinstance(report, RunReport)
    assert report.passed
    assert report.parameters == {"suite": "lemmas", "budget": None, "threads": 1}
    doc = report.as_dict()
    assert set(doc) == {"command", "parameters", "passed", "elapsed_s", "checks"}
    assert {c.criterion for c in report.checks} == set(SUITES["lemmas"])


def _scrub(doc):
    doc = dict(doc)
    doc.pop("elapsed_s", None)
    doc["checks"] = [
        {k: v for k, v in c.items() if k != "elapsed_s"} for c in doc["checks"]
    ]
    return doc


def test_reports_deterministic_modulo_timing():
    first = run_suite("constants").as_dict()
    again = run_suite("constants", threads=4).as_dict()
    assert _scrub(first)["checks"] == _scrub(again)["checks"]
    assert first["passed"] == again["passed"]


def test_budget_failures_are_reported_not_raised():
    report = run_suite("enumeration", budget=10)
    assert not report.passed
    failing = [c for c in report.checks if not c.passed]
    assert failing
    assert all("budget" in c.computed for c in failing)
