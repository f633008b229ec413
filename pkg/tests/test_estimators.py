import math

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from pslab import (AsymptoticPartitionEstimator, ExactPartitionCounter, SaddlePartitionEstimator,
                   count_table)

ESTIMATORS = [AsymptoticPartitionEstimator, SaddlePartitionEstimator, ExactPartitionCounter]


@pytest.mark.parametrize("cls", ESTIMATORS)
def test_params_roundtrip_and_clone(cls):
    est = cls(kappa="1/2", m=1)
    params = est.get_params()
    assert params["kappa"] == "1/2" and params["m"] == 1
    twin = clone(est)
    assert twin.get_params() == params and twin is not est
    est.set_params(m="inf")
    assert est.m == "inf"


@pytest.mark.parametrize("cls", ESTIMATORS)
def test_predict_before_fit_raises(cls):
    with pytest.raises(NotFittedError):
        cls().predict([10])


def test_estimators_agree_with_exact_counts():
    X = np.array([[200], [400], [800]])
    exact = ExactPartitionCounter(kappa="1/2").fit(X)
    y = exact.counts(X)
    assert y == [count_table("1/2", "inf", 800)[n] for n in (200, 400, 800)]
    for est in (AsymptoticPartitionEstimator(kappa="1/2").fit(),
                SaddlePartitionEstimator(kappa="1/2").fit()):
        err = est.ratio_error(X, y)
        assert err.shape == (3,) and np.all(err < 0.1)
        assert -0.1 < est.score(X, y) <= 0.0


def test_partition_predictions():
    X = [100, 1000]
    exact = ExactPartitionCounter(kappa=1, N=1000).fit()
    logs = exact.predict(X)
    assert logs[0] == pytest.approx(math.log(190569292))
    sad = SaddlePartitionEstimator(kappa=1).fit().predict(X)
    assert np.all(np.abs(sad - logs) < 0.05)


def test_saddle_points_decrease():
    est = SaddlePartitionEstimator(kappa="3/2", m=2).fit()
    xs = est.saddle_points([10, 100, 1000])
    assert np.all(np.diff(xs) < 0)


def test_saddle_estimator_accepts_decimal_kappa():
    est = SaddlePartitionEstimator(kappa="1.5").fit()
    assert est.kappa_.irrational
    assert np.isfinite(est.predict([500])).all()


@pytest.mark.parametrize("cls", [AsymptoticPartitionEstimator, ExactPartitionCounter])
def test_exact_only_estimators_reject_decimal_kappa(cls):
    with pytest.raises(ValueError):
        cls(kappa="1.5", N=10).fit() if cls is ExactPartitionCounter else cls(kappa="1.5").fit()


@pytest.mark.parametrize("bad", [[0], [1.5], [[1, 2]], [-3]])
def test_bad_n_values(bad):
    est = SaddlePartitionEstimator().fit()
    with pytest.raises(ValueError):
        est.predict(bad)


def test_exact_counter_table_limits():
    est = ExactPartitionCounter(kappa=2, m=1, N=10).fit()
    assert est.counts([1, 2, 4, 5]) == [1, 0, 1, 1]
    assert est.predict([2])[0] == -math.inf
    with pytest.raises(ValueError):
        est.counts([11])
    with pytest.raises(ValueError):
        ExactPartitionCounter().fit()


def test_fitted_model_attributes():
    est = AsymptoticPartitionEstimator(kappa="1/3", m=1).fit()
    assert str(est.model_.delta) == "5/8"
    assert est.kappa_.alpha_exact == 3
