"""scikit-learn wrapper: map rows of 0/1 outcomes to confidence bounds on their mean."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .intervals import Method, Side, bound_table


def check_outcomes(X, *, ensure_rounds: int | None = None) -> np.ndarray:
    """Validate a 2-D array of binary outcomes (one experiment per row) and return it as int."""
    X = np.asarray(X)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    X = check_array(X, dtype=None, ensure_all_finite=True)
    if not np.isin(X, (0, 1)).all():
        raise ValueError("outcomes must be 0 or 1")
    if ensure_rounds is not None and X.shape[1] != ensure_rounds:
        raise ValueError(f"X has {X.shape[1]} rounds, expected {ensure_rounds}")
    return X.astype(np.int64)


def check_alpha(alpha) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha <= 1.0):
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


class MeanSuccessBound(TransformerMixin, BaseEstimator):
    """One-sided confidence bound on the average success probability of each row.

    Each row of ``X`` is one experiment of ``n`` independent, not necessarily
    identical, Bernoulli trials.  ``transform`` returns a column with the bound
    for every row; it only depends on the row's success count.

    Parameters
    ----------
    alpha : float, default=0.05
        Confidence parameter; the bound holds with probability ``1 - alpha``.
    method : {"f", "g", "hoeffding", "binomlike", "clopper-pearson"}, default="f"
    side : {"lower", "upper"}, default="lower"

    Attributes
    ----------
    n_features_in_ : int
        Number of rounds per experiment seen in ``fit``.
    bounds_ : ndarray of shape (n_features_in_ + 1,)
        Bound for every possible success count.

    Examples
    --------
    >>> import numpy as np
    >>> X = np.zeros((1, 20), dtype=int); X[0, 3] = 1
    >>> MeanSuccessBound(alpha=0.05).fit(X).transform(X).round(6)
    array([[0.0025]])
    """

    def __init__(self, alpha=0.05, method="f", side="lower"):
        self.alpha = alpha
        self.method = method
        self.side = side

    def fit(self, X, y=None):
        X = check_outcomes(X)
        alpha = check_alpha(self.alpha)
        method = Method.parse(self.method)
        side = Side(self.side)
        self.n_features_in_ = X.shape[1]
        self.bounds_ = np.asarray(bound_table(method, self.n_features_in_, alpha, side))
        return self

    def transform(self, X):
        check_is_fitted(self, "bounds_")
        X = check_outcomes(X, ensure_rounds=self.n_features_in_)
        return self.bounds_[X.sum(axis=1)].reshape(-1, 1)

    def bound_for_count(self, k: int) -> float:
        check_is_fitted(self, "bounds_")
        return float(self.bounds_[k])
