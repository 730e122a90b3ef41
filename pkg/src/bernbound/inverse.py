"""Inverses of the CDF bound in the mean success probability.

:func:`f_tilde` inverts :func:`~bernbound.poibin.f_bound` in ``qbar`` on
``[0, (d+1)/n]``; :func:`g_tilde_inv` is the cheaper lower envelope obtained by
replacing ``Q``/``S`` with their linear over-bounds ``R``/``U``.
"""
from __future__ import annotations

from typing import NamedTuple

from .poibin import alpha_dagger, alpha_dagger_c
from .special import DomainError, inv_reg_inc_beta

__all__ = [
    "InverseQuery",
    "s_script",
    "s_max",
    "s_max_argmax",
    "f_tilde",
    "r_linear",
    "u_linear",
    "g_tilde_inv",
]

# |alpha - alpha_dagger| below this evaluates both branches and keeps the smaller
_TIE_TOL = 1e-12


class InverseQuery(NamedTuple):
    n: int
    d: int
    alpha: float

    def validate(self) -> "InverseQuery":
        n, d, alpha = self
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        if not (-1 <= d <= n):
            raise DomainError(f"d must lie in [-1, n={n}], got {d}")
        if not (0.0 <= alpha <= 1.0):
            raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
        return self


def _check_nc(n: int, c: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (0 <= c <= n - 1):
        raise DomainError(f"c must lie in [0, n-1={n - 1}], got {c}")


def s_script(n: int, c: int, alpha: float, s: int) -> float:
    """``(s + (n-s) I^{-1}_{1-alpha}(c-s+1, n-c)) / n``, the inverse of ``q_script`` in p."""
    _check_nc(n, c)
    if not (0 <= s <= c):
        raise DomainError(f"s must lie in [0, c={c}], got {s}")
    if not (0.0 <= alpha <= 1.0):
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return (s + (n - s) * inv_reg_inc_beta(1.0 - alpha, c - s + 1, n - c)) / n


def s_max_argmax(n: int, c: int, alpha: float) -> tuple[float, int]:
    _check_nc(n, c)
    if not (alpha_dagger_c(c, n) - _TIE_TOL <= alpha <= 1.0):
        raise DomainError(
            f"alpha={alpha} outside [alpha_dagger={alpha_dagger_c(c, n)}, 1] for n={n}, c={c}"
        )
    best, arg = -1.0, 0
    for s in range(c + 1):
        v = s_script(n, c, alpha, s)
        if v > best:
            best, arg = v, s
    return best, arg


def s_max(n: int, c: int, alpha: float) -> float:
    """``S_n(c, alpha)``, the inverse of ``q_max(n, c, .)`` on ``[c/n, (c+1)/n]``.

    Only defined for ``alpha`` in ``[alpha_dagger, 1]``; anything below raises.
    """
    return s_max_argmax(n, c, alpha)[0]


def f_tilde(d: int, n: int, alpha: float) -> float:
    """Inverse of ``f_bound(., d, n)``, extended by 0 at ``d = -1``."""
    n, d, alpha = InverseQuery(n, d, float(alpha)).validate()
    if d == -1:
        return 0.0
    if d == n:
        # f_bound(., n, n) is identically 0; no inverse, use the trivial bound
        return 1.0
    if d == 0:
        # m (1 - (1-alpha)^(1/m)) grows with m = n - s, so s = n - 1 maximises S: 1 - S = alpha / n
        return alpha / n
    adag = alpha_dagger(d, n)
    c = n - d - 1
    if alpha > adag + _TIE_TOL:
        return 1.0 - s_max(n, c, alpha)
    beta_branch = inv_reg_inc_beta(alpha, d + 1, n - d)
    if alpha >= adag - _TIE_TOL:
        return min(beta_branch, 1.0 - s_max(n, c, max(alpha, adag)))
    return beta_branch


def r_linear(n: int, c: int, p: float) -> float:
    """Linear over-bound ``1 - (1 - alpha_dagger)(np - c)`` of ``q_max`` on ``[c/n, (c+1)/n]``."""
    _check_nc(n, c)
    if not (c / n - _TIE_TOL <= p <= (c + 1) / n + _TIE_TOL):
        raise DomainError(f"p must lie in [{c / n}, {(c + 1) / n}], got {p}")
    return 1.0 - (1.0 - alpha_dagger_c(c, n)) * (n * p - c)


def u_linear(n: int, c: int, alpha: float) -> float:
    """Linear over-bound ``(c + (1-alpha)/(1-alpha_dagger)) / n`` of ``s_max``."""
    _check_nc(n, c)
    adag = alpha_dagger_c(c, n)
    if not (adag - _TIE_TOL <= alpha <= 1.0):
        raise DomainError(f"alpha={alpha} outside [alpha_dagger={adag}, 1]")
    return (c + (1.0 - alpha) / (1.0 - adag)) / n


def g_tilde_inv(d: int, n: int, alpha: float) -> float:
    """Simplified inverse: linear in ``alpha`` above the branch point, beta inverse below."""
    n, d, alpha = InverseQuery(n, d, float(alpha)).validate()
    if d == -1:
        return 0.0
    if d == n:
        return 1.0
    adag = alpha_dagger(d, n)
    linear = (d + 1 - (1.0 - alpha) / (1.0 - adag)) / n
    if alpha > adag + _TIE_TOL:
        return linear
    beta_branch = inv_reg_inc_beta(alpha, d + 1, n - d)
    if alpha >= adag - _TIE_TOL:
        return min(beta_branch, linear)
    return beta_branch
