"""Acceptance gate: every headline claim at its stated tolerance.

Each test runs one named verification (closed form against an independent
brute-force route), prints a single PASS/FAIL line, and enforces the
stated runtime budget where one applies.  Run with ``pytest -s`` to see
the per-criterion report.
"""

import time

from invariant_states import selfcheck

SEED = 0


def _report(number, result, ok, extra=""):
    status = "PASS" if (result.passed and ok) else "FAIL"
    detail = result.detail + (f"; {extra}" if extra else "")
    print(f"{status} criterion-{number:02d} {result.name}: {detail}")
    assert result.passed, f"{result.name}: {result.detail}"
    assert ok, f"{result.name}: budget exceeded ({extra})"


def _timed(fn, **kwargs):
    start = time.perf_counter()
    result = fn(**kwargs)
    return result, time.perf_counter() - start


def test_criterion_01_transfer_inverse():
    selfcheck.check_transfer_inverse()  # warm the interpreter and caches
    result, elapsed = _timed(selfcheck.check_transfer_inverse)
    _report(1, result, elapsed < 1e-3, f"runtime {elapsed * 1e3:.3f} ms < 1 ms")


def test_criterion_02_flip_partial_transpose():
    result, _ = _timed(selfcheck.check_flip_partial_transpose)
    _report(2, result, True)


def test_criterion_03_trace_formulas():
    result, elapsed = _timed(selfcheck.check_trace_formulas)
    _report(3, result, elapsed < 10.0, f"runtime {elapsed:.2f} s < 10 s")


def test_criterion_04_transform_dense_oracle():
    result, elapsed = _timed(selfcheck.check_transform_dense, seed=SEED)
    _report(4, result, elapsed < 120.0, f"runtime {elapsed:.1f} s < 120 s")


def test_criterion_05_pair_thresholds():
    result, _ = _timed(selfcheck.check_pair_thresholds)
    _report(5, result, True)


def test_criterion_06_extremal_formula():
    result, _ = _timed(selfcheck.check_extremal_formula, seed=SEED)
    _report(6, result, True)


def test_criterion_07_ppt_sign_agreement():
    result, _ = _timed(selfcheck.check_ppt_sign_agreement, seed=SEED)
    _report(7, result, True)


def test_criterion_08_criterion_disagreement():
    result, _ = _timed(selfcheck.check_criterion_disagreement)
    _report(8, result, True)


def test_criterion_09_biseparable_construction():
    result, _ = _timed(selfcheck.check_biseparable_construction)
    _report(9, result, True)


def test_criterion_10_reductions():
    result, _ = _timed(selfcheck.check_reductions, seed=SEED)
    _report(10, result, True)


def test_criterion_11_mc_convergence():
    result, elapsed = _timed(selfcheck.check_mc_convergence, seed=SEED)
    _report(11, result, elapsed < 30.0, f"runtime {elapsed:.1f} s < 30 s")
