"""Acceptance battery: one test per criterion, one printed line each.

Run with `pytest -s tests/test_acceptance.py` to see the PASS lines, or use
the CLI equivalent `a2fold verify-all`.
"""

import subprocess
import sys
import time

from a2fold import verify


def run_criterion(number, time_budget=None):
    start = time.monotonic()
    results = verify.run_all(criteria=(number,), out=None)
    elapsed = time.monotonic() - start
    assert len(results) == 1
    r = results[0]
    print(r.line())
    assert r.passed, r.detail
    if time_budget is not None:
        assert elapsed < time_budget, f"criterion {number} took {elapsed:.1f}s"


def test_criterion_01_lemma_census():
    run_criterion(1, time_budget=5.0)


def test_criterion_02_oracle_identity():
    run_criterion(2, time_budget=5.0)


def test_criterion_03_family_equivalence():
    run_criterion(3)


def test_criterion_04_hessian_certification():
    run_criterion(4)


def test_criterion_05_singular_point_counts():
    run_criterion(5, time_budget=10.0)


def test_criterion_06_excess_law():
    run_criterion(6)


def test_criterion_07_distinct_images():
    run_criterion(7)


def test_criterion_08_infinity_check():
    run_criterion(8)


def test_criterion_09_hypersurface():
    run_criterion(9, time_budget=10.0)


def test_criterion_10_real_variants():
    run_criterion(10)


def test_criterion_11_negative_control():
    # a corrupted Q_6 must fail criteria 2 and 5 in-process ...
    run_criterion(11)
    corrupted = verify.run_all(criteria=(2, 5), corrupt_q=6, out=None)
    assert [r.passed for r in corrupted] == [False, False]
    # ... and verify-all must exit nonzero on the corrupted build
    proc = subprocess.run(
        [sys.executable, "-m", "a2fold", "verify-all", "--d", "3,6", "--corrupt-q", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode != 0
