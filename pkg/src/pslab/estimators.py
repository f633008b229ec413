"""Estimator-style wrappers: fit computes constants, predict returns log p_{kappa,m}(n)."""
from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_kappa, check_m, check_n_values
from .asymptotics import DEFAULT_DERIV_N, asymptotic_estimate, theorem_constants
from .exact import count_table
from .saddle import saddle_estimate


class _LogCountMixin:
    def score(self, X, y) -> float:
        """Negative mean |log prediction - log y|, with y the exact counts."""
        pred = self.predict(X)
        logs = np.array([math.log(int(v)) for v in np.asarray(y, dtype=object).ravel()])
        return -float(np.mean(np.abs(pred - logs)))

    def ratio_error(self, X, y) -> np.ndarray:
        """|prediction / exact - 1| per n-value."""
        pred = self.predict(X)
        logs = np.array([math.log(int(v)) for v in np.asarray(y, dtype=object).ravel()])
        return np.abs(np.expm1(pred - logs))


class AsymptoticPartitionEstimator(_LogCountMixin, BaseEstimator):
    """Closed-form asymptotic for the number of partitions into floor(l^kappa).

    Parameters
    ----------
    kappa : str, int or Fraction
        Exponent, as an exact rational.
    m : int or "inf"
        Maximum multiplicity of each part index.
    deriv_N : int
        Truncation used for zeta_kappa'(0) when 1/kappa is not an integer.
    """

    def __init__(self, kappa="1", m="inf", deriv_N=DEFAULT_DERIV_N):
        self.kappa = kappa
        self.m = m
        self.deriv_N = deriv_N

    def fit(self, X=None, y=None):
        kp = check_kappa(self.kappa)
        self.model_ = theorem_constants(kp, check_m(self.m), int(self.deriv_N))
        self.kappa_ = kp
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "model_")
        n = check_n_values(X)
        return np.array([asymptotic_estimate(v, self.model_) for v in n])


class SaddlePartitionEstimator(_LogCountMixin, BaseEstimator):
    """Saddle-point estimate exp(L + n x) / sqrt(2 pi L'') of the partition count.

    Decimal kappa is accepted and treated as irrational.
    """

    def __init__(self, kappa="1", m="inf"):
        self.kappa = kappa
        self.m = m

    def fit(self, X=None, y=None):
        self.kappa_ = check_kappa(self.kappa, allow_decimal=True)
        self.m_ = check_m(self.m)
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "kappa_")
        n = check_n_values(X)
        return np.array([saddle_estimate(int(v), self.kappa_, self.m_).log_estimate for v in n])

    def saddle_points(self, X) -> np.ndarray:
        check_is_fitted(self, "kappa_")
        n = check_n_values(X)
        return np.array([saddle_estimate(int(v), self.kappa_, self.m_).x for v in n])


class ExactPartitionCounter(BaseEstimator):
    """Exact counts from a table built up to max(X) (or ``N``) at fit time."""

    def __init__(self, kappa="1", m="inf", N=None):
        self.kappa = kappa
        self.m = m
        self.N = N

    def fit(self, X=None, y=None):
        kp = check_kappa(self.kappa)
        top = self.N
        if top is None:
            if X is None:
                raise ValueError("pass X or set N")
            top = int(check_n_values(X).max())
        self.table_ = count_table(kp, check_m(self.m), int(top))
        return self

    def counts(self, X) -> list[int]:
        check_is_fitted(self, "table_")
        n = check_n_values(X)
        if n.max() > self.table_.N:
            raise ValueError(f"n={int(n.max())} exceeds the fitted table size {self.table_.N}")
        return [self.table_[int(v)] for v in n]

    def predict(self, X) -> np.ndarray:
        """log of the exact counts (-inf where the count is zero)."""
        return np.array([math.log(c) if c else -math.inf for c in self.counts(X)])
