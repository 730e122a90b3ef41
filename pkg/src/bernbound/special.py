"""Regularized incomplete beta function, its inverse in x, and binomial tails.

``I_x(a, b)`` is evaluated with a power series for small ``x (a + b)`` and the
Lentz continued fraction otherwise, after the usual symmetry switch.  The
prefactor ``x^a (1-x)^b / B(a, b)`` goes through Loader's saddle-point form
(``stirlerr``/``bd0``) so it stays accurate for ``a + b`` up to ~1e4.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "BetaArgs",
    "DomainError",
    "ConvergenceError",
    "reg_inc_beta",
    "inv_reg_inc_beta",
    "binom_tail",
    "binom_cdf",
    "log_binom",
    "beta_density",
]

_LN_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_CF_EPS = 1e-16
_CF_MAXIT = 5000
_INV_FTOL = 1e-14
_INV_MAXIT = 200
# relative step size treated as converged; ~5 ulp, below the accuracy of I_x itself
_INV_XTOL = 1e-15


class DomainError(ValueError):
    """Argument outside the mathematical domain of a function."""


class ConvergenceError(ArithmeticError):
    """An iterative method hit its iteration cap."""


class BetaArgs(NamedTuple):
    x: float
    a: float
    b: float

    def validate(self) -> "BetaArgs":
        x, a, b = self
        if not (0.0 <= x <= 1.0):
            raise DomainError(f"x must lie in [0, 1], got {x!r}")
        if not a > 0.0:
            raise DomainError(f"a must be > 0, got {a!r}")
        if not b >= 0.0:
            raise DomainError(f"b must be >= 0, got {b!r}")
        return self


def _stirlerr(z: float) -> float:
    # log(z!) - log(sqrt(2 pi z) (z/e)^z)
    if z <= 15.0:
        return math.lgamma(z + 1.0) - (z + 0.5) * math.log(z) + z - _LN_SQRT_2PI
    z2 = z * z
    return (1.0 / 12 - (1.0 / 360 - (1.0 / 1260 - (1.0 / 1680 - 1.0 / (1188 * z2)) / z2) / z2) / z2) / z


def _bd0(x: float, m: float) -> float:
    # x log(x/m) + m - x, computed without cancellation when x ~ m
    if abs(x - m) < 0.1 * (x + m):
        v = (x - m) / (x + m)
        s = (x - m) * v
        ej = 2.0 * x * v
        v2 = v * v
        j = 1
        while True:
            ej *= v2
            s1 = s + ej / (2 * j + 1)
            if s1 == s:
                return s
            s = s1
            j += 1
    return x * math.log(x / m) + m - x


def _log_prefactor(x: float, a: float, b: float) -> float:
    """log of x^a (1-x)^b / B(a, b) for 0 < x < 1."""
    n = a + b
    return (
        0.5 * math.log(a * b / (2.0 * math.pi * n))
        + _stirlerr(n)
        - _stirlerr(a)
        - _stirlerr(b)
        - _bd0(a, n * x)
        - _bd0(b, n * (1.0 - x))
    )


def _betacf(x: float, a: float, b: float) -> float:
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ConvergenceError(f"continued fraction did not converge for a={a}, b={b}, x={x}")


def _hyp_series(x: float, a: float, b: float) -> float:
    # 2F1(a+b, 1; a+1; x), caller guarantees the term ratio stays below ~1/2
    total = 1.0
    term = 1.0
    k = 0
    while True:
        term *= x * (a + b + k) / (a + 1.0 + k)
        total += term
        if term < 1e-17 * total:
            return total
        k += 1
        if k > _CF_MAXIT:
            raise ConvergenceError(f"series did not converge for a={a}, b={b}, x={x}")


def _lower(x: float, a: float, b: float) -> float:
    """I_x(a, b) without the symmetry switch; x well inside the convergent region."""
    pref = math.exp(_log_prefactor(x, a, b)) / a
    if x * (a + b) <= 0.5 * (a + 1.0):
        return pref * _hyp_series(x, a, b)
    return pref * _betacf(x, a, b)


def reg_inc_beta(x: float, a: float, b: float) -> float:
    """Regularized incomplete beta function ``I_x(a, b)``.

    ``b == 0`` is accepted as the limit case: the result is 0 for ``x < 1``
    and 1 at ``x == 1``.

    :raises DomainError: if ``x`` is outside [0, 1], ``a <= 0`` or ``b < 0``.
    """
    x, a, b = BetaArgs(float(x), float(a), float(b)).validate()
    if b == 0.0:
        return 1.0 if x == 1.0 else 0.0
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    if x > (a + 1.0) / (a + b + 2.0):
        val = 1.0 - _lower(1.0 - x, b, a)
    else:
        val = _lower(x, a, b)
    return min(1.0, max(0.0, val))


def beta_density(x: float, a: float, b: float) -> float:
    """Density of Beta(a, b) at ``x``; the x-derivative of ``I_x(a, b)``."""
    if x <= 0.0 or x >= 1.0:
        if x == 0.0 and a == 1.0:
            return b
        if x == 1.0 and b == 1.0:
            return a
        return 0.0
    return math.exp(_log_prefactor(x, a, b) - math.log(x) - math.log1p(-x))


def _initial_guess(p: float, a: float, b: float) -> float:
    if a >= 1.0 and b >= 1.0:
        pp = p if p < 0.5 else 1.0 - p
        t = math.sqrt(-2.0 * math.log(pp))
        z = (2.30753 + t * 0.27061) / (1.0 + t * (0.99229 + t * 0.04481)) - t
        if p < 0.5:
            z = -z
        al = (z * z - 3.0) / 6.0
        h = 2.0 / (1.0 / (2.0 * a - 1.0) + 1.0 / (2.0 * b - 1.0))
        w = z * math.sqrt(al + h) / h - (1.0 / (2.0 * b - 1.0) - 1.0 / (2.0 * a - 1.0)) * (
            al + 5.0 / 6.0 - 2.0 / (3.0 * h)
        )
        return a / (a + b * math.exp(min(2.0 * w, 700.0)))
    lna = math.log(a / (a + b))
    lnb = math.log(b / (a + b))
    t = math.exp(a * lna) / a
    u = math.exp(b * lnb) / b
    w = t + u
    if p < t / w:
        return (a * w * p) ** (1.0 / a)
    return 1.0 - (b * w * (1.0 - p)) ** (1.0 / b)


@lru_cache(maxsize=1 << 16)
def _inverse(alpha: float, a: float, b: float) -> float:
    if a == 1.0 and b == 1.0:
        return alpha
    if b == 1.0:
        # I_x(a, 1) = x^a
        return alpha ** (1.0 / a)
    if a == 1.0:
        # I_x(1, b) = 1 - (1-x)^b
        return -math.expm1(math.log1p(-alpha) / b)

    if alpha > 0.5:
        # 1 - alpha is exact here; solve in the tail where alpha is small
        return 1.0 - _inverse(1.0 - alpha, b, a)

    lo, hi = 0.0, 1.0
    x = _initial_guess(alpha, a, b)
    if not (0.0 < x < 1.0):
        x = 0.5
    log_alpha = math.log(alpha)
    ftol = _INV_FTOL * alpha
    for _ in range(_INV_MAXIT):
        f = reg_inc_beta(x, a, b)
        err = f - alpha
        if abs(err) <= ftol:
            return x
        if err < 0.0:
            lo = x
        else:
            hi = x
        if hi - lo <= 2.0 * math.ulp(x):
            return x
        # Newton on log I in log x: exact in one step when I ~ c x^a
        dens = beta_density(x, a, b)
        x_new = math.nan
        if f > 0.0 and dens > 0.0:
            slope = x * dens / f
            x_new = x * math.exp(max(-700.0, min(700.0, -(math.log(f) - log_alpha) / slope)))
        if not (lo < x_new < hi):
            # geometric midpoint when the bracket spans many scales
            x_new = math.sqrt(lo * hi) if lo > 0.0 and hi > 4.0 * lo else 0.5 * (lo + hi)
        if abs(x_new - x) <= _INV_XTOL * x_new:
            return x_new
        x = x_new
    raise ConvergenceError(f"inverse beta did not converge for alpha={alpha}, a={a}, b={b}")


def inv_reg_inc_beta(alpha: float, a: float, b: float) -> float:
    """Return the ``x`` in [0, 1] with ``I_x(a, b) == alpha``.

    Newton iteration on ``log I`` in ``log x``, safeguarded by a shrinking
    bracket; ``alpha > 1/2`` is solved through ``I_{1-x}(b, a) = 1 - alpha``.

    :raises DomainError: on ``alpha`` outside [0, 1] or ``a, b <= 0``.
    :raises ConvergenceError: after 200 iterations without convergence.
    """
    alpha, a, b = float(alpha), float(a), float(b)
    if not (0.0 <= alpha <= 1.0):
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"a and b must be > 0, got a={a!r}, b={b!r}")
    if alpha == 0.0:
        return 0.0
    if alpha == 1.0:
        return 1.0
    return _inverse(alpha, a, b)


def _check_counts(n: int, d: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n!r}")
    if not (0 <= d <= n):
        raise DomainError(f"d must lie in [0, n={n}], got {d!r}")


def binom_tail(n: int, d: int, x: float) -> float:
    """Upper binomial tail ``sum_{k=d}^{n} C(n,k) x^k (1-x)^(n-k)``."""
    _check_counts(n, d)
    if d == 0:
        return 1.0
    return reg_inc_beta(x, d, n - d + 1)


def binom_cdf(n: int, d: int, x: float) -> float:
    """Lower binomial tail ``sum_{k=0}^{d} C(n,k) x^k (1-x)^(n-k)``."""
    _check_counts(n, d)
    if d == n:
        return 1.0
    return reg_inc_beta(1.0 - x, n - d, d + 1)


def log_binom(n: float, k: float) -> float:
    """``log C(n, k)`` through log-gamma."""
    return math.lgamma(n + 1.0) - math.lgamma(k + 1.0) - math.lgamma(n - k + 1.0)
