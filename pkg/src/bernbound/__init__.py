"""Confidence bounds on the average success probability of independent,
non-identical Bernoulli trials, with exact verification oracles."""

from .estimator import MeanSuccessBound
from .intervals import (
    CIQuery,
    IntervalResult,
    Method,
    Side,
    alpha_star,
    bound_table,
    bound_value,
    compute_bound,
    qhat_binomlike,
    qhat_clopper_pearson,
    qhat_f,
    qhat_f_upper,
    qhat_g,
    qhat_g_upper,
    qhat_hoeffding,
)
from .poibin import BernoulliModel, PoissonBinomial, exact_pmf, f_bound
from .special import ConvergenceError, DomainError, inv_reg_inc_beta, reg_inc_beta

__version__ = "0.1.0"

__all__ = [
    "BernoulliModel",
    "CIQuery",
    "ConvergenceError",
    "DomainError",
    "IntervalResult",
    "MeanSuccessBound",
    "Method",
    "PoissonBinomial",
    "Side",
    "alpha_star",
    "bound_table",
    "bound_value",
    "compute_bound",
    "exact_pmf",
    "f_bound",
    "inv_reg_inc_beta",
    "qhat_binomlike",
    "qhat_clopper_pearson",
    "qhat_f",
    "qhat_f_upper",
    "qhat_g",
    "qhat_g_upper",
    "qhat_hoeffding",
    "reg_inc_beta",
]
