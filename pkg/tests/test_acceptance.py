"""Acceptance gate: one test per headline criterion, each with a runtime cap.

Every test reruns its criterion's registered checks from scratch through
the reproduction registry, asserts each check passed at its stated
tolerance, and enforces the wall-clock limit.  Run with -v for one
pass/fail line per criterion.
"""

import time

import pytest

from simplexcut.reproduce import run_criterion

# (criterion number, registry name, wall-clock limit in seconds)
GATE = (
    (1, "optimizer", 60.0),
    (2, "limitation", 60.0),
    (3, "instance-totals", 5.0),
    (4, "named-cut-goldens", 10.0),
    (5, "sperner-extremal", 120.0),
    (6, "cut-size-floor", 30.0),
    (7, "exhaustive-min-floor", 60.0),
    (8, "terminal-flow-floor", 60.0),
    (9, "canonicalization", 30.0),
    (10, "format-determinism", 10.0),
)


@pytest.mark.parametrize(
    "number,criterion,limit",
    GATE,
    ids=[f"criterion-{num:02d}-{name}" for num, name, _ in GATE],
)
def test_acceptance(number, criterion, limit):
    started = time.perf_counter()
    checks = run_criterion(criterion)
    elapsed = time.perf_counter() - started
    failures = [c for c in checks if not c.passed]
    verdict = "PASS" if not failures and elapsed < limit else "FAIL"
    print(
        f"criterion {number:2d} [{criterion}]: {verdict} "
        f"({len(checks)} checks, {elapsed:.2f}s < {limit:.0f}s)"
    )
    for c in failures:
        print(f"  failed {c.id}: expected {c.expected}, computed {c.computed}")
    assert not failures, [c.id for c in failures]
    assert elapsed < limit, f"{criterion} took {elapsed:.2f}s, limit {limit:.0f}s"
