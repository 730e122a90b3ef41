"""Poisson-binomial distribution and Hoeffding's (1956) bound on its CDF.

For ``n`` independent Bernoulli trials with mean success probability ``qbar``
the number of successes satisfies ``P(K <= d) >= 1 - f_bound(qbar, d, n)``,
and the bound is attained by a small family of extremal models (a block of
certain trials followed by a constant block, or a block of impossible trials
followed by a constant block).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .special import DomainError, reg_inc_beta

__all__ = [
    "BernoulliModel",
    "PoissonBinomial",
    "HoeffdingIndex",
    "exact_pmf",
    "q_script",
    "q_max",
    "q_max_argmax",
    "f_bound",
    "alpha_dagger",
    "alpha_dagger_c",
    "extremal_model_upper",
    "extremal_model_s",
    "extremal_models",
]

# tolerance on comparisons of n*qbar against integers
_BRANCH_TOL = 1e-12


@dataclass(frozen=True)
class BernoulliModel:
    """Per-trial success probabilities of ``n`` independent trials."""

    q: tuple[float, ...]

    def __init__(self, q: Sequence[float]):
        q = tuple(float(v) for v in np.ravel(np.asarray(q, dtype=float)))
        if not q:
            raise DomainError("a model needs at least one trial")
        if any(not (0.0 <= v <= 1.0) for v in q):
            raise DomainError(f"success probabilities must lie in [0, 1], got {q!r}")
        object.__setattr__(self, "q", q)

    @property
    def n(self) -> int:
        return len(self.q)

    def mean(self) -> float:
        return math.fsum(self.q) / len(self.q)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.q, dtype=float)


@dataclass(frozen=True)
class PoissonBinomial:
    """Distribution of the success count; ``pmf[d] = P(K = d)`` for d = 0..n."""

    pmf: np.ndarray

    @property
    def n(self) -> int:
        return len(self.pmf) - 1

    def cdf(self, d: int) -> float:
        if d < 0:
            return 0.0
        if d >= self.n:
            return 1.0
        return min(1.0, math.fsum(self.pmf[: d + 1]))

    def sf(self, d: int) -> float:
        """``P(K >= d)``."""
        if d <= 0:
            return 1.0
        if d > self.n:
            return 0.0
        return min(1.0, math.fsum(self.pmf[d:]))


class HoeffdingIndex(NamedTuple):
    """Index triple ``(n, d, c)`` with ``c = n - d - 1``."""

    n: int
    d: int
    c: int

    @classmethod
    def from_d(cls, n: int, d: int) -> "HoeffdingIndex":
        return cls(n, d, n - d - 1)

    @classmethod
    def from_c(cls, n: int, c: int) -> "HoeffdingIndex":
        return cls(n, n - c - 1, c)


def exact_pmf(model: BernoulliModel | Sequence[float]) -> PoissonBinomial:
    """Exact PMF of the success count by sequential convolution, O(n^2)."""
    if not isinstance(model, BernoulliModel):
        model = BernoulliModel(model)
    pmf = np.zeros(model.n + 1)
    pmf[0] = 1.0
    for i, p in enumerate(model.q, start=1):
        pmf[1 : i + 1] = pmf[1 : i + 1] * (1.0 - p) + pmf[:i] * p
        pmf[0] *= 1.0 - p
    return PoissonBinomial(pmf)


def _check_nc(n: int, c: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (0 <= c <= n - 1):
        raise DomainError(f"c must lie in [0, n-1={n - 1}], got {c}")


def q_script(n: int, c: int, p: float, s: int) -> float:
    """``1 - I_{(np-s)/(n-s)}(c-s+1, n-c)`` for a fixed number ``s`` of zero trials."""
    _check_nc(n, c)
    if not (0 <= s <= c):
        raise DomainError(f"s must lie in [0, c={c}], got {s}")
    if not (s / n - _BRANCH_TOL <= p <= 1.0):
        raise DomainError(f"p must lie in [s/n={s / n}, 1], got {p}")
    x = min(1.0, max(0.0, (n * p - s) / (n - s)))
    return 1.0 - reg_inc_beta(x, c - s + 1, n - c)


def q_max_argmax(n: int, c: int, p: float) -> tuple[float, int]:
    """Max of :func:`q_script` over admissible integer ``s`` and the first maximiser."""
    _check_nc(n, c)
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"p must lie in [0, 1], got {p}")
    s_hi = min(c, math.floor(n * p + 1e-9))
    best, arg = -1.0, 0
    for s in range(s_hi + 1):
        v = q_script(n, c, p, s)
        if v > best:
            best, arg = v, s
    return best, arg


def q_max(n: int, c: int, p: float) -> float:
    """``Q_n(c, p)``: the largest :func:`q_script` value over ``s``."""
    return q_max_argmax(n, c, p)[0]


@lru_cache(maxsize=1 << 14)
def alpha_dagger(d: int, n: int) -> float:
    """Branch point ``I_{d/n}(d+1, n-d)`` between the beta and the Q regimes."""
    if n < 1 or not (0 <= d <= n - 1):
        raise DomainError(f"need 0 <= d <= n-1, got d={d}, n={n}")
    return reg_inc_beta(d / n, d + 1, n - d)


def alpha_dagger_c(c: int, n: int) -> float:
    """The same branch point written in terms of ``c = n - d - 1``."""
    _check_nc(n, c)
    return 1.0 - reg_inc_beta((c + 1) / n, c + 1, n - c)


def f_bound(qbar: float, d: int, n: int) -> float:
    """Hoeffding's bound: ``P(K <= d) >= 1 - f_bound(qbar, d, n)`` for every model of mean ``qbar``.

    Ties of ``n*qbar`` with an integer branch edge resolve to the larger value.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (-1 <= d <= n):
        raise DomainError(f"d must lie in [-1, n={n}], got {d}")
    if not (0.0 <= qbar <= 1.0):
        raise DomainError(f"qbar must lie in [0, 1], got {qbar}")
    if d == -1:
        return 1.0
    if d == n:
        return 0.0
    nq = n * qbar
    if d <= nq - 1.0 + _BRANCH_TOL:
        return 1.0
    c = n - d - 1
    if d >= nq + _BRANCH_TOL:
        return reg_inc_beta(qbar, d + 1, n - d)
    middle = q_max(n, c, 1.0 - qbar)
    if d >= nq - _BRANCH_TOL:
        return max(middle, reg_inc_beta(qbar, d + 1, n - d))
    return middle


def _clip01(v: float) -> float:
    return min(1.0, max(0.0, v))


def extremal_model_upper(d: int, n: int, qbar: float) -> BernoulliModel:
    """``d + 1`` certain successes followed by a constant block; P(K <= d) = 0."""
    if not (0 <= d <= n - 1):
        raise DomainError(f"need 0 <= d <= n-1, got d={d}, n={n}")
    if d > n * qbar - 1.0 + _BRANCH_TOL:
        raise DomainError(f"requires d <= n*qbar - 1, got d={d}, n*qbar={n * qbar}")
    rest = n - d - 1
    fill = _clip01((n * qbar - d - 1) / rest) if rest else 1.0
    return BernoulliModel([1.0] * (d + 1) + [fill] * rest)


def extremal_model_s(s: int, n: int, qbar: float) -> BernoulliModel:
    """``s`` impossible trials followed by ``n - s`` trials of probability ``n qbar/(n-s)``."""
    if not (0 <= s <= n - 1):
        raise DomainError(f"need 0 <= s <= n-1, got s={s}, n={n}")
    if n * qbar > n - s + _BRANCH_TOL:
        raise DomainError(f"requires n*qbar <= n - s, got n*qbar={n * qbar}, s={s}")
    fill = _clip01(n * qbar / (n - s))
    return BernoulliModel([0.0] * s + [fill] * (n - s))


def extremal_models(d: int, n: int, qbar: float) -> Iterator[BernoulliModel]:
    """Every extremal model of mean ``qbar`` that applies at success count ``d``."""
    if 0 <= d <= n - 1 and d <= n * qbar - 1.0 + _BRANCH_TOL:
        yield extremal_model_upper(d, n, qbar)
    for s in range(n):
        if n * qbar <= n - s + _BRANCH_TOL:
            yield extremal_model_s(s, n, qbar)
