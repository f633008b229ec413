import math

import numpy as np
import pytest

from pslab import big_l, count_table, mellin_expansion, saddle_estimate, solve_saddle
from pslab.saddle import RESIDUAL_TOL, beta_constant, big_l_with_bound
from pslab.sequence import ps_term

Z2 = math.pi ** 2 / 6


def _direct_l(x, kappa, m="inf", terms=200_000):
    # plain summation over indices, as an oracle
    if kappa == "1/2":
        vals = np.array([math.isqrt(l) for l in range(1, terms)], dtype=float)
    else:
        vals = np.array([ps_term(l, kappa) for l in range(1, terms)], dtype=float)
    out = -np.log1p(-np.exp(-x * vals)).sum()
    if m != "inf":
        out += np.log1p(-np.exp(-(m + 1) * x * vals)).sum()
    return out


def test_beta_constant_examples():
    assert beta_constant(1) == pytest.approx(Z2)
    assert beta_constant(1, 1) == pytest.approx(Z2 / 2)
    assert beta_constant("1/2", 1) == pytest.approx(3 * 1.2020569031595942)


@pytest.mark.parametrize("kappa,m", [("1", "inf"), ("1/2", "inf"), ("3/2", 2), ("2", 1)])
def test_big_l_matches_direct_sum(kappa, m):
    x = 0.05
    # enough indices that x * part exceeds ~30
    terms = {"1": 20_000, "1/2": 500_000}.get(kappa, 3000)
    ref = _direct_l(x, kappa, m if m == "inf" else int(m), terms)
    assert big_l(x, 0, kappa, m) == pytest.approx(ref, rel=1e-12)


def test_big_l_euler_identity():
    # L_1(x) = -log prod (1 - e^{-kx}); compare with the pentagonal series at x = 1
    q = math.exp(-1.0)
    euler = 0.0
    for k in range(-30, 31):
        euler += (-1) ** k * q ** (k * (3 * k - 1) / 2)
    assert big_l(1.0, 0, 1) == pytest.approx(-math.log(euler), rel=1e-14)


@pytest.mark.parametrize("kappa,m", [("1", "inf"), ("1/2", 1), ("2", "inf")])
@pytest.mark.parametrize("x", [0.01, 0.1, 0.7])
def test_big_l_derivatives_by_central_difference(kappa, m, x):
    h = 1e-4 * x
    for j in (0, 1):
        fd = (big_l(x + h, j, kappa, m) - big_l(x - h, j, kappa, m)) / (2 * h)
        assert fd == pytest.approx(big_l(x, j + 1, kappa, m), rel=1e-6)


def test_big_l_bounds_and_errors():
    value, bound = big_l_with_bound(0.01, 0, "1/2")
    assert 0 <= bound < 1e-12 * value
    with pytest.raises(ValueError):
        big_l(0.0, 0, 1)
    with pytest.raises(ValueError):
        big_l(0.1, 3, 1)


@pytest.mark.parametrize("kappa,m", [("1", "inf"), ("1", 1), ("1/2", "inf"), ("2", 1), ("3/2", 3)])
@pytest.mark.parametrize("n", [10, 1000, 100_000])
def test_saddle_residual(kappa, m, n):
    r = solve_saddle(n, kappa, m)
    assert abs(r.l_values[1] + n) <= RESIDUAL_TOL * n * 1.0001
    assert r.x > 0 and r.l_values[2] > 0


def test_saddle_point_partitions_large_n():
    # first order: x ~ pi / sqrt(6 n)
    r = solve_saddle(10_000, 1)
    assert r.x == pytest.approx(math.pi / math.sqrt(6e4), rel=3e-3)


def test_saddle_monotone_in_n():
    xs = [solve_saddle(n, "1/2").x for n in (10, 100, 1000, 10_000)]
    assert all(a > b for a, b in zip(xs, xs[1:]))


def test_saddle_rejects_nonpositive_n():
    with pytest.raises(ValueError):
        solve_saddle(0, 1)


def test_saddle_estimate_partition_examples():
    table = count_table(1, "inf", 500)
    r = saddle_estimate(500, 1)
    assert math.exp(r.log_estimate - math.log(table[500])) == pytest.approx(1.0067, abs=5e-4)
    assert r.estimate == pytest.approx(math.exp(r.log_estimate))


def test_saddle_estimate_overflow_is_logged():
    r = saddle_estimate(10 ** 7, 1)
    assert r.estimate == math.inf and math.isfinite(r.log_estimate)


@pytest.mark.parametrize("kappa,m", [("1", "inf"), ("1/2", "inf"), ("1/2", 1)])
def test_saddle_error_decreases(kappa, m):
    table = count_table(kappa, m, 1000)
    errs = [abs(math.exp(saddle_estimate(n, kappa, m).log_estimate - math.log(table[n])) - 1)
            for n in (125, 250, 500, 1000)]
    assert all(a > b for a, b in zip(errs, errs[1:]))


@pytest.mark.xfail(strict=True, reason="squares with m = 1: parity effects make the ratio oscillate")
def test_saddle_error_decreases_squares_distinct():
    table = count_table(2, 1, 2000)
    errs = [abs(math.exp(saddle_estimate(n, 2, 1).log_estimate - math.log(table[n])) - 1)
            for n in (125, 250, 500, 1000, 2000)]
    assert all(a > b for a, b in zip(errs, errs[1:]))


@pytest.mark.parametrize("kappa", ["1", "1/2"])
def test_mellin_expansion_converges(kappa):
    errs = [abs(big_l(x, 0, kappa) - mellin_expansion(x, 0, kappa)) for x in (1e-1, 1e-2, 1e-3)]
    assert errs[2] < errs[0]
    assert errs[2] < 1e-2


def test_mellin_expansion_squares_is_exponentially_accurate():
    # zeta(2s) has no poles left of 1/2 that survive Gamma, so only zeta_2'(0) limits accuracy
    from pslab import ps_zeta_deriv_zero
    bound = ps_zeta_deriv_zero(2).error_bound
    for x in (1e-1, 1e-2, 1e-3):
        assert abs(big_l(x, 0, 2) - mellin_expansion(x, 0, 2)) <= bound + 1e-12


def test_mellin_expansion_partitions_exact_form():
    # L_1(x) = pi^2/(6x) + log(x/(2 pi))/2 - x/24 + O(e^{-4 pi^2/x})
    x = 0.05
    assert mellin_expansion(x, 0, 1) - x / 24 == pytest.approx(big_l(x, 0, 1), abs=1e-12)
    assert mellin_expansion(x, 1, 1) == pytest.approx(-Z2 / x ** 2 + 0.5 / x)
    assert mellin_expansion(x, 2, 1) == pytest.approx(2 * Z2 / x ** 3 - 0.5 / x ** 2)


def test_mellin_argument_checks():
    with pytest.raises(ValueError):
        mellin_expansion(-1.0, 0, 1)
    with pytest.raises(ValueError):
        mellin_expansion(0.1, 5, 1)

