"""Verification oracles for the bounds.

Exact coverage is evaluated against the Poisson-binomial PMF; Monte Carlo
coverage uses numpy's PCG64 generator with one spawned stream per fixed-size
partition so results do not depend on how partitions are scheduled.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .intervals import Method, Side, bound_table, bound_value
from .inverse import f_tilde, g_tilde_inv, r_linear, s_max, u_linear
from .poibin import (
    BernoulliModel,
    alpha_dagger,
    alpha_dagger_c,
    exact_pmf,
    extremal_model_s,
    extremal_model_upper,
    f_bound,
    q_max,
    q_max_argmax,
)
from .special import DomainError, log_binom

__all__ = [
    "RNG_ALGORITHM",
    "COVERAGE_SLACK",
    "TABLE_I",
    "TABLE_II",
    "CoverageReport",
    "CheckReport",
    "SequentialRecord",
    "SequentialSummary",
    "exact_coverage",
    "mc_coverage",
    "random_models",
    "tightness_witness",
    "raised_step_coverage",
    "binomial_mode_product",
    "alpha_dagger_floor_check",
    "table1_check",
    "table2_check",
    "constant_policy",
    "adversarial_threshold_policy",
    "momentum_policy",
    "parse_policy",
    "run_sequential",
    "run_sequential_batch",
    "coverage_sweep",
    "cdf_bound_tightness_sweep",
    "cdf_bound_validity_sweep",
    "buehler_tightness_sweep",
    "linear_bound_sweep",
    "binomial_mode_sweep",
    "estimator_order_sweep",
    "clopper_pearson_sweep",
    "inverse_identity_sweep",
    "run_suite",
]

RNG_ALGORITHM = "numpy.PCG64"
# bound values are accurate to ~1e-13; ties closer than this count as covered
COVERAGE_SLACK = 1e-12
_PARTITION = 1 << 14

# alpha_dagger(d, n) as printed, d = 1..n-1
TABLE_I: dict[int, tuple[str, ...]] = {
    16: ("0.264", "0.323", "0.352", "0.370", "0.382", "0.391", "0.397", "0.402", "0.405", "0.407", "0.407", "0.405", "0.400", "0.388", "0.356"),
    15: ("0.264", "0.323", "0.352", "0.370", "0.382", "0.390", "0.396", "0.401", "0.403", "0.404", "0.403", "0.398", "0.387", "0.355"),
    14: ("0.264", "0.323", "0.352", "0.369", "0.381", "0.389", "0.395", "0.399", "0.401", "0.400", "0.396", "0.385", "0.354"),
    13: ("0.264", "0.323", "0.351", "0.369", "0.381", "0.389", "0.394", "0.397", "0.397", "0.394", "0.383", "0.353"),
    12: ("0.264", "0.323", "0.351", "0.368", "0.380", "0.387", "0.392", "0.393", "0.391", "0.381", "0.352"),
    11: ("0.264", "0.322", "0.351", "0.368", "0.379", "0.385", "0.388", "0.387", "0.379", "0.350"),
    10: ("0.264", "0.322", "0.350", "0.367", "0.377", "0.382", "0.383", "0.376", "0.349"),
    9: ("0.264", "0.322", "0.350", "0.366", "0.374", "0.377", "0.372", "0.346"),
    8: ("0.264", "0.321", "0.349", "0.363", "0.370", "0.367", "0.344"),
    7: ("0.264", "0.321", "0.347", "0.359", "0.360", "0.340"),
    6: ("0.263", "0.320", "0.344", "0.351", "0.335"),
    5: ("0.263", "0.317", "0.337", "0.328"),
    4: ("0.262", "0.313", "0.316"),
    3: ("0.259", "0.296"),
    2: ("1/4",),
}

# C(16, d) (d/16)^d ((16-d)/16)^(16-d): exact value and printed decimal; d and 16-d share a column
TABLE_II: dict[int, tuple[str, str]] = {
    3: ("286216975729679085/1152921504606846976", "0.248254"),
    4: ("241805655/1073741824", "0.225199"),
    5: ("243406518990009375/1152921504606846976", "0.211122"),
    6: ("7126259765625/35184372088832", "0.20254"),
    7: ("228126063717356805/1152921504606846976", "0.197868"),
    8: ("6435/32768", "0.196381"),
}


@dataclass(frozen=True)
class CoverageReport:
    model: BernoulliModel
    method: Method
    alpha: float
    exact_coverage: float
    side: Side = Side.LOWER
    mc_coverage: float | None = None
    mc_trials: int = 0
    seed: int | None = None
    rng: str = RNG_ALGORITHM

    @property
    def mc_sigma(self) -> float:
        if not self.mc_trials:
            return math.nan
        p = self.exact_coverage
        return math.sqrt(p * (1.0 - p) / self.mc_trials)


@dataclass
class CheckReport:
    """Outcome of one verification sweep."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        first = f" first_failure={self.failures[0]}" if self.failures else ""
        extra = f" {self.detail}" if self.detail else ""
        return f"{status} {self.name} checked={self.checked} failures={len(self.failures)}{extra}{first}"


# --------------------------------------------------------------------------- coverage


def _as_model(model) -> BernoulliModel:
    return model if isinstance(model, BernoulliModel) else BernoulliModel(model)


def _covered_mask(values: Sequence[float], qbar: float, side: Side) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if side is Side.LOWER:
        return values <= qbar + COVERAGE_SLACK
    return values >= qbar - COVERAGE_SLACK


def exact_coverage(model, method: Method | str, alpha: float, side: Side | str = Side.LOWER,
                   values: Sequence[float] | None = None) -> CoverageReport:
    """``P(qbar >= qhat)`` (or ``<=`` for upper bounds) under ``model``, from the exact PMF.

    ``values`` may carry precomputed bound values for k = 0..n.
    """
    model = _as_model(model)
    method, side = Method.parse(method), Side(side)
    if values is None:
        values = bound_table(method, model.n, alpha, side)
    pmf = exact_pmf(model).pmf
    mask = _covered_mask(values, model.mean(), side)
    cov = min(1.0, math.fsum(pmf[mask]))
    return CoverageReport(model, method, alpha, cov, side)


def _mc_partition(q: np.ndarray, covered: np.ndarray, size: int, seq: np.random.SeedSequence) -> int:
    rng = np.random.Generator(np.random.PCG64(seq))
    counts = (rng.random((size, q.size)) < q).sum(axis=1)
    return int(covered[counts].sum())


def mc_coverage(model, method: Method | str, alpha: float, trials: int, seed: int,
                side: Side | str = Side.LOWER, workers: int = 1) -> CoverageReport:
    """Monte Carlo coverage; output depends on ``seed`` only, never on ``workers``."""
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    model = _as_model(model)
    method, side = Method.parse(method), Side(side)
    values = bound_table(method, model.n, alpha, side)
    exact = exact_coverage(model, method, alpha, side, values=values)
    covered = _covered_mask(values, model.mean(), side)
    q = model.as_array()

    n_parts = -(-trials // _PARTITION)
    sizes = [_PARTITION] * (n_parts - 1) + [trials - _PARTITION * (n_parts - 1)]
    seqs = np.random.SeedSequence(seed).spawn(n_parts)
    jobs = list(zip(sizes, seqs))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = list(pool.map(lambda job: _mc_partition(q, covered, *job), jobs))
    else:
        hits = [_mc_partition(q, covered, *job) for job in jobs]
    return CoverageReport(model, method, alpha, exact.exact_coverage, side,
                          mc_coverage=sum(hits) / trials, mc_trials=trials, seed=seed)


def random_models(count: int, n_max: int, seed: int) -> list[BernoulliModel]:
    """A reproducible mix of uniform, snapped-to-{0,1}, U-shaped and step models."""
    rng = np.random.Generator(np.random.PCG64(seed))
    models = []
    for i in range(count):
        n = int(rng.integers(1, n_max + 1))
        kind = i % 4
        if kind == 0:
            q = rng.random(n)
        elif kind == 1:
            q = rng.random(n)
            u = rng.random(n)
            q[u < 1 / 3] = 0.0
            q[u > 2 / 3] = 1.0
        elif kind == 2:
            q = rng.beta(0.3, 0.3, n)
        else:
            s = int(rng.integers(0, n))
            q = np.concatenate([np.zeros(s), np.full(n - s, rng.random())])
        models.append(BernoulliModel(q))
    return models


# --------------------------------------------------------------------------- optimality witnesses


def tightness_witness(n: int, k: int, alpha: float, epsilon: float) -> BernoulliModel:
    """Extremal model of mean ``qhat_f(n, k, alpha) + epsilon`` with ``P(K <= k-1) < 1 - alpha``.

    Any monotone bound that reports more than ``qhat_f + epsilon`` at ``k``
    successes fails to cover this model often enough.
    """
    if not (1 <= k <= n):
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if not (0.0 < alpha < 1.0) or epsilon <= 0.0:
        raise DomainError("need 0 < alpha < 1 and epsilon > 0")
    qbar = bound_value(Method.F, n, k, alpha) + epsilon
    if qbar > k / n:
        raise DomainError(f"qhat_f + epsilon = {qbar} exceeds k/n = {k / n}")
    d, nq = k - 1, n * qbar
    if d <= nq - 1.0:
        return extremal_model_upper(d, n, qbar)
    if nq <= d:
        return extremal_model_s(0, n, qbar)
    _, s = q_max_argmax(n, n - d - 1, 1.0 - qbar)
    return extremal_model_s(s, n, qbar)


def raised_step_coverage(model, k: int, level: float) -> float:
    """Exact coverage of the step bound that is 0 below ``k`` successes and ``level`` from ``k`` on."""
    model = _as_model(model)
    dist = exact_pmf(model)
    if model.mean() >= level:
        return 1.0
    return dist.cdf(k - 1)


# --------------------------------------------------------------------------- bound and table checks


def binomial_mode_product(N: int, y: int) -> float:
    """``C(N, y) (y/N)^y ((N-y)/N)^(N-y)``; at most 1/2 for ``0 < y < N``."""
    if not (0 < y < N):
        raise DomainError(f"need 0 < y < N, got y={y}, N={N}")
    return math.exp(log_binom(N, y) + y * math.log(y / N) + (N - y) * math.log1p(-y / N))


def _golden_value(text: str) -> float:
    return float(Fraction(text))


def table1_check(n_max: int = 16, perturb: float = 0.0) -> tuple[CheckReport, list[tuple]]:
    """Compare alpha_dagger against the printed 3-decimal table; returns (report, rows)."""
    report = CheckReport("table-I")
    rows = []
    for n in range(2, min(16, n_max) + 1):
        for d, text in enumerate(TABLE_I[n], start=1):
            value = alpha_dagger(d, n) + perturb
            golden = _golden_value(text)
            ok = abs(value - golden) <= 5e-4 + 1e-12 and value >= 0.25 - 1e-12
            report.check(ok, f"n={n} d={d} computed={value:.6f} printed={text}")
            rows.append(("I", n, d, value, text, ok))
    return report, rows


def table2_check(perturb: float = 0.0) -> tuple[CheckReport, list[tuple]]:
    """Recompute the n = 16 binomial-mode products exactly and against the printed decimals."""
    report = CheckReport("table-II")
    rows = []
    n = 16
    for d, (rational, decimal) in TABLE_II.items():
        exact = Fraction(math.comb(n, d) * d**d * (n - d) ** (n - d), n**n)
        value = binomial_mode_product(n, d) + perturb
        mirror = binomial_mode_product(n, n - d) + perturb
        ok = (
            exact == Fraction(rational)
            and abs(value - float(exact)) <= 1e-12
            and abs(value - float(decimal)) <= 1e-6
            and abs(mirror - value) <= 1e-12
            and value < 0.25
        )
        report.check(ok, f"d={d} computed={value:.9f} printed={decimal}")
        rows.append(("II", n, d, value, decimal, ok))
    return report, rows


def alpha_dagger_floor_check(n_max: int) -> CheckReport:
    """Every ``alpha_dagger(d, n)`` with ``2 <= n <= n_max, 1 <= d <= n-1`` is at least 1/4."""
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    report = CheckReport("alpha-dagger-floor")
    lowest = math.inf
    for n in range(2, n_max + 1):
        for d in range(1, n):
            v = alpha_dagger(d, n)
            lowest = min(lowest, v)
            report.check(v >= 0.25 - 1e-12, f"n={n} d={d} alpha_dagger={v}")
    table, _ = table1_check(n_max)
    report.checked += table.checked
    report.failures += table.failures
    report.detail = f"min={lowest:.12g}"
    return report


# --------------------------------------------------------------------------- sequential sampling

SequentialPolicy = Callable[[Sequence[int]], float]


def constant_policy(p: float) -> SequentialPolicy:
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"p must lie in [0, 1], got {p}")
    return lambda history: p


def adversarial_threshold_policy(history: Sequence[int]) -> float:
    """Succeed for sure while the success count trails half the round index, else fail."""
    i = len(history) + 1
    return 1.0 if sum(history) < i / 2 else 0.0


def momentum_policy(history: Sequence[int]) -> float:
    """0.5 on the first round, then 0.9 after a success and 0.1 after a failure."""
    if not history:
        return 0.5
    return 0.9 if history[-1] else 0.1


def parse_policy(text: str) -> SequentialPolicy:
    name, _, arg = text.partition(":")
    if name == "constant":
        try:
            return constant_policy(float(arg))
        except ValueError:
            raise DomainError(f"constant policy needs a probability, got {text!r}") from None
    if name == "adversarial-threshold" and not arg:
        return adversarial_threshold_policy
    if name == "momentum" and not arg:
        return momentum_policy
    raise DomainError(f"unknown policy {text!r}")


@dataclass(frozen=True)
class SequentialRecord:
    outcomes: tuple[int, ...]
    realized_qbar: float
    successes: int
    qhat_f_value: float
    covered: bool


@dataclass(frozen=True)
class SequentialSummary:
    runs: int
    alpha: float
    covered_fraction: float
    sigma: float

    @property
    def passed(self) -> bool:
        return self.covered_fraction >= 1.0 - self.alpha - 3.0 * self.sigma


def _simulate(policy: SequentialPolicy, n: int, uniforms: np.ndarray, table: list[float]) -> SequentialRecord:
    history: list[int] = []
    probs = []
    for i in range(n):
        q = float(policy(tuple(history)))
        if not (0.0 <= q <= 1.0):
            raise DomainError(f"policy returned {q}, outside [0, 1]")
        probs.append(q)
        history.append(1 if uniforms[i] < q else 0)
    qbar = math.fsum(probs) / n
    k = sum(history)
    return SequentialRecord(tuple(history), qbar, k, table[k], table[k] <= qbar + COVERAGE_SLACK)


def run_sequential_batch(policy: SequentialPolicy, n: int, alpha: float, runs: int,
                         seed: int) -> tuple[list[SequentialRecord], SequentialSummary]:
    """Play ``runs`` independent sequential experiments and score the ``F`` bound on each."""
    if n < 1 or runs < 1:
        raise DomainError("n and runs must be >= 1")
    table = bound_table(Method.F, n, alpha)
    rng = np.random.Generator(np.random.PCG64(seed))
    uniforms = rng.random((runs, n))
    records = [_simulate(policy, n, uniforms[r], table) for r in range(runs)]
    frac = sum(r.covered for r in records) / runs
    sigma = math.sqrt(alpha * (1.0 - alpha) / runs)
    return records, SequentialSummary(runs, alpha, frac, sigma)


def run_sequential(policy: SequentialPolicy, n: int, alpha: float, seed: int) -> SequentialRecord:
    records, _ = run_sequential_batch(policy, n, alpha, 1, seed)
    return records[0]


# --------------------------------------------------------------------------- sweeps

DEFAULT_ALPHAS = (0.01, 0.05, 0.1, 0.25, 0.5, 0.9)


def coverage_sweep(n_max: int = 12, n_models: int = 500, alphas: Iterable[float] = DEFAULT_ALPHAS,
                   seed: int = 20240101, trials: int = 0, methods=(Method.F, Method.G)) -> CheckReport:
    """Exact coverage >= 1 - alpha for both sides; with ``trials`` also checks MC agreement."""
    report = CheckReport("coverage")
    alphas = tuple(alphas)
    tables = {}
    for n in range(1, n_max + 1):
        for a in alphas:
            for m in methods:
                for side in Side:
                    tables[n, a, m, side] = bound_table(m, n, a, side)
    models = random_models(n_models, n_max, seed)
    worst = math.inf
    for i, model in enumerate(models):
        for a in alphas:
            for m in methods:
                for side in Side:
                    cov = exact_coverage(model, m, a, side, values=tables[model.n, a, m, side]).exact_coverage
                    worst = min(worst, cov - (1.0 - a))
                    report.check(cov >= 1.0 - a - 1e-10,
                                 f"model#{i} n={model.n} method={m.value} side={side.value} alpha={a} coverage={cov}")
    if trials > 0:
        for i, model in enumerate(models[:20]):
            rep = mc_coverage(model, Method.F, 0.1, trials, seed + i)
            tol = 4.0 * math.sqrt(rep.exact_coverage * (1.0 - rep.exact_coverage) / trials)
            report.check(abs(rep.mc_coverage - rep.exact_coverage) <= max(tol, 1.0 / trials),
                         f"model#{i} mc={rep.mc_coverage} exact={rep.exact_coverage}")
    report.detail = f"min_margin={worst:.3g}"
    return report


def _grid(step: float) -> list[float]:
    m = round(1.0 / step)
    return [i / m for i in range(m + 1)]


def cdf_bound_tightness_sweep(n_max: int = 10, step: float = 0.05) -> CheckReport:
    """The smallest CDF over the extremal models equals ``1 - f_bound`` at every grid point."""
    report = CheckReport("cdf-bound-tightness")
    for n in range(1, n_max + 1):
        for qbar in _grid(step):
            dists = [exact_pmf(extremal_model_s(s, n, qbar))
                     for s in range(n) if n * qbar <= n - s + 1e-12]
            for d in range(n + 1):
                candidates = [dist.cdf(d) for dist in dists]
                if 0 <= d <= n - 1 and d <= n * qbar - 1.0 + 1e-12:
                    candidates.append(exact_pmf(extremal_model_upper(d, n, qbar)).cdf(d))
                target = 1.0 - f_bound(qbar, d, n)
                report.check(abs(min(candidates) - target) <= 1e-10,
                             f"n={n} qbar={qbar} d={d} best={min(candidates)} bound={target}")
    return report


def cdf_bound_validity_sweep(count: int = 200, n_max: int = 12, seed: int = 7) -> CheckReport:
    report = CheckReport("cdf-bound-validity")
    for i, model in enumerate(random_models(count, n_max, seed)):
        dist = exact_pmf(model)
        qbar = model.mean()
        for d in range(model.n + 1):
            report.check(dist.cdf(d) >= 1.0 - f_bound(qbar, d, model.n) - 1e-10,
                         f"model#{i} d={d}")
    return report


def buehler_tightness_sweep(n_max: int = 12, alphas: Iterable[float] = (0.05, 0.25),
                            epsilon: float = 1e-6) -> CheckReport:
    """Raising ``qhat_f`` by more than ``epsilon`` at any ``k`` breaks coverage; ``f_bound(qhat_f) = alpha``."""
    report = CheckReport("buehler-tightness")
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            for a in alphas:
                qf = bound_value(Method.F, n, k, a)
                report.check(abs(f_bound(qf, k - 1, n) - a) <= 1e-9, f"n={n} k={k} alpha={a} f_bound(qhat_f)")
                model = tightness_witness(n, k, a, epsilon)
                cov = raised_step_coverage(model, k, qf + 2.0 * epsilon)
                report.check(cov < 1.0 - a, f"n={n} k={k} alpha={a} raised coverage={cov}")
    return report


def linear_bound_sweep(n_max: int = 20, points: int = 21) -> CheckReport:
    """``q_max <= r_linear`` and ``s_max <= u_linear``, with equality when ``c = n - 1``."""
    report = CheckReport("linear-bounds")
    for n in range(1, n_max + 1):
        for c in range(n):
            for j in range(points):
                p = (c + j / (points - 1)) / n
                q, r = q_max(n, c, p), r_linear(n, c, p)
                report.check(q <= r + 1e-12, f"Q>R n={n} c={c} p={p} Q={q} R={r}")
                if c == n - 1:
                    report.check(abs(q - r) <= 1e-10, f"Q!=R n={n} c={c} p={p}")
            adag = alpha_dagger_c(c, n)
            for j in range(points):
                a = adag + (1.0 - adag) * j / (points - 1)
                s, u = s_max(n, c, a), u_linear(n, c, a)
                report.check(s <= u + 1e-12, f"S>U n={n} c={c} alpha={a} S={s} U={u}")
                if c == n - 1:
                    report.check(abs(s - u) <= 1e-10, f"S!=U n={n} c={c} alpha={a}")
    return report


def binomial_mode_sweep(N_max: int = 200) -> CheckReport:
    report = CheckReport("binomial-mode")
    for N in range(2, N_max + 1):
        for y in range(1, N):
            v = binomial_mode_product(N, y)
            report.check(v <= 0.5 + 1e-12, f"N={N} y={y} value={v}")
    return report


def estimator_order_sweep(n_max: int = 40, alphas: Iterable[float] | None = None) -> CheckReport:
    """``qhat_f == qhat_g`` for alpha <= 1/4; ``qhat_f >= qhat_g >= {binomlike, hoeffding}`` for alpha <= 1/2."""
    report = CheckReport("estimator-order")
    alphas = tuple(alphas) if alphas is not None else tuple(i / 100 for i in range(1, 51))
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            for a in alphas:
                f = bound_value(Method.F, n, k, a)
                g = bound_value(Method.G, n, k, a)
                one = bound_value(Method.BINOMLIKE, n, k, a)
                h = bound_value(Method.HOEFFDING, n, k, a)
                if a <= 0.25:
                    report.check(abs(f - g) <= 1e-11, f"f!=g n={n} k={k} alpha={a} f={f} g={g}")
                report.check(f >= g - 1e-12 and g >= max(one, h) - 1e-12,
                             f"order n={n} k={k} alpha={a} f={f} g={g} q1={one} H={h}")
    return report


def clopper_pearson_sweep(n_max: int = 100, alphas: Iterable[float] | None = None) -> CheckReport:
    report = CheckReport("clopper-pearson-invalid")
    alphas = tuple(alphas) if alphas is not None else tuple(i / 100 for i in range(1, 100))
    for n in range(2, n_max + 1):
        for a in alphas:
            cp = bound_value(Method.CLOPPER_PEARSON, n, 1, a)
            f = bound_value(Method.F, n, 1, a)
            report.check(cp > f and abs(f - a / n) <= 1e-12, f"n={n} alpha={a} cp={cp} f={f}")
    return report


def inverse_identity_sweep(n_max: int = 25, step: float = 0.02) -> CheckReport:
    """``f_bound(f_tilde(alpha)) == alpha`` and ``g_tilde_inv <= f_tilde``."""
    report = CheckReport("inverse-identity")
    for n in range(1, n_max + 1):
        for d in range(n):
            for a in _grid(step):
                ft = f_tilde(d, n, a)
                report.check(abs(f_bound(ft, d, n) - a) <= 1e-9, f"n={n} d={d} alpha={a}")
                report.check(g_tilde_inv(d, n, a) <= ft + 1e-12, f"g>f n={n} d={d} alpha={a}")
    return report


def run_suite(suite: str, n_max: int | None = None, trials: int = 0, seed: int = 20240101) -> list[CheckReport]:
    """Run a named group of sweeps: ``coverage``, ``tightness``, ``lemmas`` or ``all``."""
    suites = {
        "coverage": lambda: [coverage_sweep(n_max or 12, seed=seed, trials=trials),
                             cdf_bound_validity_sweep(n_max=n_max or 12, seed=seed)],
        "tightness": lambda: [cdf_bound_tightness_sweep(min(n_max or 10, 10)),
                              buehler_tightness_sweep(n_max or 12)],
        "lemmas": lambda: [linear_bound_sweep(min(n_max or 20, 20)), binomial_mode_sweep(200),
                           alpha_dagger_floor_check(max(n_max or 100, 2))],
    }
    if suite == "all":
        return [r for name in ("coverage", "tightness", "lemmas") for r in suites[name]()]
    if suite not in suites:
        raise DomainError(f"unknown suite {suite!r}")
    return suites[suite]()
