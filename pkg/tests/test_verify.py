import math
from fractions import Fraction

import numpy as np
import pytest

from bernbound.intervals import Method, Side, qhat_f
from bernbound.poibin import BernoulliModel, extremal_model_s, f_bound
from bernbound.special import DomainError
from bernbound.verify import (
    RNG_ALGORITHM,
    TABLE_I,
    adversarial_threshold_policy,
    alpha_dagger_floor_check,
    constant_policy,
    coverage_sweep,
    exact_coverage,
    binomial_mode_product,
    mc_coverage,
    momentum_policy,
    parse_policy,
    raised_step_coverage,
    random_models,
    run_sequential,
    run_sequential_batch,
    run_suite,
    table1_check,
    table2_check,
    tightness_witness,
)

from oracles import enumerate_pmf


class TestExactCoverage:
    def test_all_zero_model(self):
        rep = exact_coverage([0.0] * 5, Method.F, 0.1)
        assert rep.exact_coverage == 1.0
        assert rep.rng == RNG_ALGORITHM

    def test_iid_half(self):
        vals = [qhat_f(2, k, 0.25).value for k in range(3)]
        assert vals == pytest.approx([0.0, 0.125, 0.5], abs=1e-14)
        assert exact_coverage([0.5, 0.5], "f", 0.25).exact_coverage == 1.0

    def test_iid_extremal_model(self):
        assert exact_coverage(extremal_model_s(0, 10, 0.3), Method.F, 0.1).exact_coverage >= 0.9

    def test_against_enumeration(self):
        q = [0.9, 0.2, 0.55, 0.7]
        vals = [qhat_f(4, k, 0.2).value for k in range(5)]
        qbar = sum(q) / 4
        expected = sum(p for p, v in zip(enumerate_pmf(q), vals) if v <= qbar)
        assert exact_coverage(q, "f", 0.2).exact_coverage == pytest.approx(expected, abs=1e-14)

    def test_sweep_small(self):
        rep = coverage_sweep(n_max=6, n_models=60)
        assert rep.passed, rep.failures[:3]


class TestMonteCarlo:
    def test_single_trial(self):
        assert mc_coverage([0, 0, 0], "f", 0.1, trials=1, seed=5).mc_coverage == 1.0

    def test_agrees_with_exact(self):
        rep = mc_coverage([0.5, 0.5], "f", 0.25, trials=100_000, seed=1)
        assert rep.mc_coverage == rep.exact_coverage == 1.0

    def test_deterministic_and_worker_independent(self):
        model = BernoulliModel([0.1, 0.6, 0.35, 0.8, 0.5])
        a = mc_coverage(model, "g", 0.3, trials=50_000, seed=42)
        b = mc_coverage(model, "g", 0.3, trials=50_000, seed=42)
        c = mc_coverage(model, "g", 0.3, trials=50_000, seed=42, workers=4)
        assert a == b == c
        assert mc_coverage(model, "g", 0.3, trials=50_000, seed=43).mc_coverage != a.mc_coverage

    def test_twenty_models_within_four_sigma(self):
        trials = 100_000
        for i, model in enumerate(random_models(20, 12, seed=99)):
            rep = mc_coverage(model, Method.F, 0.1, trials, seed=i)
            p = rep.exact_coverage
            assert abs(rep.mc_coverage - p) <= max(4 * math.sqrt(p * (1 - p) / trials), 1 / trials)

    def test_upper_side(self):
        rep = mc_coverage([0.7] * 8, "f", 0.2, trials=20_000, seed=3, side=Side.UPPER)
        assert rep.exact_coverage >= 0.8
        assert abs(rep.mc_coverage - rep.exact_coverage) <= 4 * rep.mc_sigma

    def test_rejects_zero_trials(self):
        with pytest.raises(DomainError):
            mc_coverage([0.5], "f", 0.1, trials=0, seed=0)


class TestWitness:
    def test_example(self):
        model = tightness_witness(2, 1, 0.25, 0.01)
        assert qhat_f(2, 1, 0.25).value == pytest.approx(0.125, abs=1e-14)
        assert model.mean() == pytest.approx(0.135, abs=1e-12)
        assert raised_step_coverage(model, 1, 0.125 + 0.02) < 0.75

    def test_limit(self):
        for n, k, a in [(2, 1, 0.25), (10, 4, 0.05), (12, 12, 0.25)]:
            q = qhat_f(n, k, a).value
            assert f_bound(q + 1e-9, k - 1, n) - a == pytest.approx(0.0, abs=1e-6)
            assert f_bound(q + 1e-9, k - 1, n) >= a

    @pytest.mark.parametrize("n", [3, 7, 12])
    def test_coverage_broken_everywhere(self, n):
        eps = 1e-6
        for k in range(1, n + 1):
            for a in (0.05, 0.25):
                model = tightness_witness(n, k, a, eps)
                assert model.mean() == pytest.approx(qhat_f(n, k, a).value + eps, abs=1e-12)
                assert raised_step_coverage(model, k, qhat_f(n, k, a).value + 2 * eps) < 1 - a

    def test_domain(self):
        with pytest.raises(DomainError):
            tightness_witness(5, 0, 0.1, 1e-6)
        with pytest.raises(DomainError):
            tightness_witness(5, 2, 1.0, 1e-6)


class TestBinomialModeAndTables:
    def test_binomial_mode_examples(self):
        assert binomial_mode_product(2, 1) == pytest.approx(0.5, abs=1e-15)
        assert binomial_mode_product(3, 1) == pytest.approx(4 / 9, abs=1e-15)
        assert binomial_mode_product(16, 8) == pytest.approx(6435 / 32768, abs=1e-15)
        with pytest.raises(DomainError):
            binomial_mode_product(4, 4)

    def test_binomial_mode_exact(self):
        for N in range(2, 40):
            for y in range(1, N):
                exact = Fraction(math.comb(N, y) * y**y * (N - y) ** (N - y), N**N)
                assert binomial_mode_product(N, y) == pytest.approx(float(exact), rel=1e-13)
                assert exact <= Fraction(1, 2)

    def test_alpha_dagger_floor(self):
        rep = alpha_dagger_floor_check(100)
        assert rep.passed
        assert rep.checked == sum(range(1, 100)) + 120

    def test_table1(self):
        rep, rows = table1_check()
        assert rep.passed and rep.checked == 120 and len(rows) == 120
        assert sum(len(v) for v in TABLE_I.values()) == 120
        cell = next(r for r in rows if r[1] == 10 and r[2] == 5)
        assert round(cell[3], 3) == 0.377

    def test_table2(self):
        rep, rows = table2_check()
        assert rep.passed and len(rows) == 6
        values = {r[2]: r[3] for r in rows}
        assert values[3] == pytest.approx(0.248254, abs=1e-6)
        assert values[8] == pytest.approx(0.196381, abs=1e-6)
        assert binomial_mode_product(16, 13) == pytest.approx(values[3], abs=1e-15)

    def test_perturbation_detected(self):
        assert not table1_check(perturb=1e-3)[0].passed
        assert not table2_check(perturb=1e-5)[0].passed

    def test_bound_suite(self):
        assert all(r.passed for r in run_suite("lemmas", n_max=30))


class TestSequential:
    def test_all_zero_policy(self):
        rec = run_sequential(constant_policy(0.0), 10, 0.05, seed=3)
        assert rec.outcomes == (0,) * 10
        assert rec.realized_qbar == 0.0 and rec.qhat_f_value == 0.0 and rec.covered

    def test_policies(self):
        assert adversarial_threshold_policy(()) == 1.0
        assert adversarial_threshold_policy((1,)) == 0.0
        assert adversarial_threshold_policy((1, 0)) == 1.0
        assert momentum_policy(()) == 0.5
        assert momentum_policy((0, 1)) == 0.9
        assert momentum_policy((1, 0)) == 0.1
        assert parse_policy("constant:0.25")(()) == 0.25
        for bad in ("constant:x", "constant:2", "momentum:1", "random"):
            with pytest.raises(DomainError):
                parse_policy(bad)

    def test_iid_matches_exact_coverage(self):
        runs = 10_000
        _, summary = run_sequential_batch(constant_policy(0.3), 20, 0.05, runs, seed=8)
        exact = exact_coverage([0.3] * 20, "f", 0.05).exact_coverage
        assert abs(summary.covered_fraction - exact) <= 4 * math.sqrt(exact * (1 - exact) / runs)

    @pytest.mark.parametrize("policy", ["constant:0.5", "adversarial-threshold", "momentum"])
    def test_coverage_holds(self, policy):
        _, summary = run_sequential_batch(parse_policy(policy), 20, 0.05, 10_000, seed=0)
        assert summary.passed
        assert summary.covered_fraction >= 0.95 - 3 * summary.sigma

    def test_deterministic(self):
        a = run_sequential_batch(momentum_policy, 12, 0.1, 200, seed=4)
        b = run_sequential_batch(momentum_policy, 12, 0.1, 200, seed=4)
        assert a == b

    def test_realized_mean(self):
        rec = run_sequential(momentum_policy, 6, 0.1, seed=11)
        expected = [0.5] + [0.9 if t else 0.1 for t in rec.outcomes[:-1]]
        assert rec.realized_qbar == pytest.approx(np.mean(expected), abs=1e-15)
        assert rec.successes == sum(rec.outcomes)
