"""One-sided confidence bounds on the mean success probability.

Every lower bound takes the observed success count ``k`` out of ``n`` trials
and a confidence parameter ``alpha``; the matching upper bound is obtained by
the mirror ``1 - lower(n - k)``.

``F``
    Buehler-optimal bound, the largest valid bound monotone in ``k``.
``G``
    Closed-form relaxation of ``F``; identical to it whenever ``alpha <= 1/4``.
``HOEFFDING``
    From Hoeffding's 1963 inequality, clamped to [0, 1].
``BINOMLIKE``
    Binomial-like bound, valid only for ``alpha <= 1/2``.
``CLOPPER_PEARSON``
    The i.i.d. Clopper-Pearson bound.  Not valid for non-identical trials;
    kept as a reference.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .inverse import f_tilde, g_tilde_inv
from .poibin import alpha_dagger
from .special import DomainError, inv_reg_inc_beta

__all__ = [
    "Method",
    "Side",
    "CIQuery",
    "IntervalResult",
    "qhat_f",
    "qhat_f_upper",
    "qhat_g",
    "qhat_g_upper",
    "qhat_hoeffding",
    "qhat_binomlike",
    "qhat_clopper_pearson",
    "alpha_star",
    "compute_bound",
    "bound_value",
    "bound_table",
]


class Method(str, enum.Enum):
    F = "f"
    G = "g"
    HOEFFDING = "hoeffding"
    BINOMLIKE = "binomlike"
    CLOPPER_PEARSON = "clopper-pearson"

    @classmethod
    def parse(cls, value: "str | Method") -> "Method":
        if isinstance(value, Method):
            return value
        key = value.strip().lower().replace("_", "-")
        aliases = {"h": "hoeffding", "1": "binomlike", "cp": "clopper-pearson", "0": "clopper-pearson"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown method {value!r}") from None


class Side(str, enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class CIQuery:
    n: int
    k: int
    alpha: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if int(self.k) != self.k or not (0 <= self.k <= self.n):
            raise DomainError(f"k must be an integer in [0, n={self.n}], got {self.k!r}")
        if not (0.0 <= self.alpha <= 1.0):
            raise DomainError(f"alpha must lie in [0, 1], got {self.alpha!r}")

    @property
    def mean(self) -> float:
        return self.k / self.n


@dataclass(frozen=True)
class IntervalResult:
    method: Method
    side: Side
    value: float
    query: CIQuery
    flags: tuple[str, ...] = ()

    def __float__(self) -> float:
        return self.value


NOT_VALID_ABOVE_HALF = "alpha > 1/2: validity not guaranteed"
INVALID_NONIID = "invalid for non-identical trials"


def alpha_star(n: int, k: int) -> float:
    """Branch point of the ``G`` bound at ``k`` successes, ``I_{(k-1)/n}(k, n-k+1)``."""
    if not (1 <= k <= n):
        raise DomainError(f"alpha_star needs 1 <= k <= n, got k={k}, n={n}")
    return alpha_dagger(k - 1, n)


def _lower_f(n: int, k: int, alpha: float) -> float:
    return f_tilde(k - 1, n, alpha)


def _lower_g(n: int, k: int, alpha: float) -> float:
    return g_tilde_inv(k - 1, n, alpha)


def _lower_hoeffding(n: int, k: int, alpha: float) -> float:
    if alpha <= 0.0:
        raise DomainError("the Hoeffding bound is -infinity at alpha = 0")
    return min(1.0, max(0.0, k / n - math.sqrt(-math.log(alpha) / (2.0 * n))))


def _lower_binomlike(n: int, k: int, alpha: float) -> float:
    if k <= 1:
        return 0.0
    return inv_reg_inc_beta(alpha, k - 1, n - k + 2)


def _lower_clopper_pearson(n: int, k: int, alpha: float) -> float:
    if k == 0:
        return 0.0
    return inv_reg_inc_beta(alpha, k, n - k + 1)


_LOWER = {
    Method.F: _lower_f,
    Method.G: _lower_g,
    Method.HOEFFDING: _lower_hoeffding,
    Method.BINOMLIKE: _lower_binomlike,
    Method.CLOPPER_PEARSON: _lower_clopper_pearson,
}


def bound_value(method: Method | str, n: int, k: int, alpha: float, side: Side | str = Side.LOWER) -> float:
    """Raw bound value without building a result record."""
    method = Method.parse(method)
    if Side(side) is Side.LOWER:
        return _LOWER[method](n, k, alpha)
    return 1.0 - _LOWER[method](n, n - k, alpha)


def _flags(method: Method, alpha: float) -> tuple[str, ...]:
    if method is Method.BINOMLIKE and alpha > 0.5:
        return (NOT_VALID_ABOVE_HALF,)
    if method is Method.CLOPPER_PEARSON:
        return (INVALID_NONIID,)
    return ()


def compute_bound(method: Method | str, n: int, k: int, alpha: float, side: Side | str = Side.LOWER) -> IntervalResult:
    method = Method.parse(method)
    side = Side(side)
    query = CIQuery(n, k, float(alpha))
    value = bound_value(method, n, k, query.alpha, side)
    return IntervalResult(method, side, value, query, _flags(method, query.alpha))


def bound_table(method: Method | str, n: int, alpha: float, side: Side | str = Side.LOWER) -> list[float]:
    """Bound values for every success count ``k = 0..n``."""
    return [bound_value(method, n, k, alpha, side) for k in range(n + 1)]


def qhat_f(n: int, k: int, alpha: float) -> IntervalResult:
    """Buehler-optimal lower bound: ``P(qbar >= qhat_f) >= 1 - alpha``."""
    return compute_bound(Method.F, n, k, alpha, Side.LOWER)


def qhat_f_upper(n: int, k: int, alpha: float) -> IntervalResult:
    return compute_bound(Method.F, n, k, alpha, Side.UPPER)


def qhat_g(n: int, k: int, alpha: float) -> IntervalResult:
    """Closed-form lower bound; never above :func:`qhat_f`, equal to it for ``alpha <= 1/4``."""
    return compute_bound(Method.G, n, k, alpha, Side.LOWER)


def qhat_g_upper(n: int, k: int, alpha: float) -> IntervalResult:
    return compute_bound(Method.G, n, k, alpha, Side.UPPER)


def qhat_hoeffding(n: int, k: int, alpha: float) -> IntervalResult:
    return compute_bound(Method.HOEFFDING, n, k, alpha, Side.LOWER)


def qhat_binomlike(n: int, k: int, alpha: float) -> IntervalResult:
    return compute_bound(Method.BINOMLIKE, n, k, alpha, Side.LOWER)


def qhat_clopper_pearson(n: int, k: int, alpha: float) -> IntervalResult:
    return compute_bound(Method.CLOPPER_PEARSON, n, k, alpha, Side.LOWER)
