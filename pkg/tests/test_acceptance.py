"""Acceptance criteria, each run at its stated tolerance and time budget.

Every test prints one ``ACCEPTANCE <id> PASS|FAIL`` line (visible even under
output capture) before asserting.  Memo caches are cleared first so timings
are cold.
"""
import math
import time

import numpy as np
import pytest

from bernbound.intervals import qhat_f, qhat_g
from bernbound.poibin import alpha_dagger
from bernbound.special import _inverse, binom_cdf, binom_tail, inv_reg_inc_beta, reg_inc_beta
from bernbound.verify import (
    buehler_tightness_sweep,
    cdf_bound_tightness_sweep,
    clopper_pearson_sweep,
    estimator_order_sweep,
    coverage_sweep,
    linear_bound_sweep,
    binomial_mode_sweep,
    parse_policy,
    run_sequential_batch,
    table1_check,
    table2_check,
)

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    _inverse.cache_clear()
    alpha_dagger.cache_clear()

    def emit(cid, title, ok, elapsed, budget, detail=""):
        within = elapsed < budget
        status = "PASS" if ok and within else "FAIL"
        line = f"ACCEPTANCE {cid:>2} {status} {title}: {elapsed:.4g}s (budget {budget:g}s)"
        if detail:
            line += f" {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, detail or title
        assert within, f"took {elapsed:.4g}s, budget {budget}s"

    return emit


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_01_golden_one_in_twenty(report):
    (f, g), dt = timed(lambda: (qhat_f(20, 1, 0.05).value, qhat_g(20, 1, 0.05).value))
    ok = abs(f - 1 / 400) <= 1e-12 and abs(g - 1 / 400) <= 1e-12
    report(1, "qhat_f = qhat_g = 1/400 at n=20, k=1, alpha=0.05", ok, dt, 1e-3, f"f={f!r} g={g!r}")


def test_02_alpha_dagger_table(report):
    (rep, rows), dt = timed(table1_check)
    ok = rep.passed and rep.checked == 120 and all(r[3] >= 0.25 for r in rows)
    report(2, "alpha-dagger table, 120 cells to 3 decimals, all >= 1/4", ok, dt, 1.0,
           rep.failures[0] if rep.failures else "")


def test_03_binomial_mode_table(report):
    (rep, rows), dt = timed(table2_check)
    ok = rep.passed and len(rows) == 6 and all(r[3] < 0.25 for r in rows)
    report(3, "binomial-mode table, 6 values to 6 decimals, all < 1/4", ok, dt, 0.1,
           rep.failures[0] if rep.failures else "")


def test_04_coverage_guarantee(report):
    rep, dt = timed(lambda: coverage_sweep(n_max=12, n_models=500))
    ok = rep.passed and rep.checked == 500 * 6 * 2 * 2
    report(4, "exact coverage >= 1 - alpha, F and G, both sides, 500 models x 6 alphas", ok, dt, 30.0,
           rep.detail if ok else rep.failures[0])


def test_05_cdf_bound_tightness(report):
    rep, dt = timed(lambda: cdf_bound_tightness_sweep(n_max=10, step=0.05))
    report(5, "extremal models attain 1 - f within 1e-10, n <= 10, 0.05 grid", rep.passed, dt, 60.0,
           rep.failures[0] if rep.failures else f"checked={rep.checked}")


def test_06_buehler_tightness(report):
    rep, dt = timed(lambda: buehler_tightness_sweep(n_max=12, alphas=(0.05, 0.25), epsilon=1e-6))
    report(6, "raised estimator loses coverage; f_bound(qhat_f) = alpha within 1e-9", rep.passed, dt, 30.0,
           rep.failures[0] if rep.failures else f"checked={rep.checked}")


def test_07_estimator_order(report):
    rep, dt = timed(lambda: estimator_order_sweep(n_max=40))
    report(7, "qhat_f = qhat_g (alpha <= 1/4) and qhat_f >= qhat_g >= {q1, qH} (alpha <= 1/2), n <= 40",
           rep.passed, dt, 10.0, rep.failures[0] if rep.failures else f"checked={rep.checked}")


def test_08_linear_bounds_and_binomial_mode(report):
    (r5, r6), dt = timed(lambda: (linear_bound_sweep(n_max=20, points=41), binomial_mode_sweep(200)))
    ok = r5.passed and r6.passed
    bad = (r5.failures + r6.failures)[:1]
    report(8, "Q <= R, S <= U (equal at c = n-1); binomial-mode product <= 1/2 for N <= 200", ok, dt, 30.0,
           bad[0] if bad else f"checked={r5.checked + r6.checked}")


def test_09_clopper_pearson_invalid(report):
    rep, dt = timed(lambda: clopper_pearson_sweep(n_max=100))
    report(9, "Clopper-Pearson exceeds qhat_f = alpha/n at k=1, 2 <= n <= 100", rep.passed, dt, 1.0,
           rep.failures[0] if rep.failures else f"checked={rep.checked}")


def _special_function_checks():
    failures = []
    grid = np.linspace(0.0, 1.0, 41)
    for a in range(1, 31, 3):
        for b in range(1, 31, 3):
            for x in grid:
                if abs(reg_inc_beta(x, a, b) - (1.0 - reg_inc_beta(1.0 - x, b, a))) > 1e-12:
                    failures.append(f"symmetry x={x} a={a} b={b}")
    xs = [i / 20 for i in range(21)]
    for n in range(1, 61):
        for x in xs:
            terms = [math.comb(n, j) * x**j * (1 - x) ** (n - j) for j in range(n + 1)]
            for d in range(1, n + 1):
                if abs(binom_tail(n, d, x) - math.fsum(terms[d:])) > 1e-12:
                    failures.append(f"tail n={n} d={d} x={x}")
                if abs(binom_cdf(n, d, x) - math.fsum(terms[: d + 1])) > 1e-12:
                    failures.append(f"cdf n={n} d={d} x={x}")
    for a in range(1, 51):
        for b in range(1, 51):
            for alpha in np.linspace(0.0, 1.0, 11):
                if abs(reg_inc_beta(inv_reg_inc_beta(alpha, a, b), a, b) - alpha) > 1e-10:
                    failures.append(f"round trip alpha={alpha} a={a} b={b}")
    return failures


def test_10_special_function_identities(report):
    failures, dt = timed(_special_function_checks)
    report(10, "beta symmetry 1e-12, beta-binomial 1e-12, inverse round trip 1e-10", not failures, dt, 10.0,
           failures[0] if failures else "")


def test_11_sequential_demo(report):
    def run_all():
        out = {}
        for policy in ("constant:0.5", "adversarial-threshold", "momentum"):
            _, summary = run_sequential_batch(parse_policy(policy), 20, 0.05, 10_000, seed=0)
            out[policy] = summary
        return out

    summaries, dt = timed(run_all)
    ok = all(s.covered_fraction >= 0.95 - 3 * s.sigma for s in summaries.values())
    detail = " ".join(f"{p}={s.covered_fraction:.4f}" for p, s in summaries.items())
    report(11, "sequential policies cover at >= 0.95 - 3 sigma, 10^4 runs each", ok, dt, 30.0, detail)
