import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from pslab import PoleError
from pslab.numerics import EULER_GAMMA, bernoulli, digamma, gamma_fn, zeta_deriv, zeta_em

mp.mp.dps = 30


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("k", range(0, 40))
def test_bernoulli_matches_mpmath(k):
    assert float(bernoulli(k)) == pytest.approx(float(mp.bernoulli(k)), rel=1e-15, abs=0)


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_gamma_examples():
    assert gamma_fn(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma_fn(5.0) == pytest.approx(24.0, rel=1e-14)
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.5, 7.3])
def test_gamma_recurrence(x):
    assert abs(gamma_fn(x + 1) - x * gamma_fn(x)) <= 1e-10 * abs(gamma_fn(x + 1))


@pytest.mark.parametrize("x", [-3.7, -0.5, 0.01, 2.2, 33.3, 49.9])
def test_gamma_matches_mpmath(x):
    assert gamma_fn(x) == pytest.approx(float(mp.gamma(x)), rel=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma_fn(x)


@pytest.mark.parametrize("x", [0.3, 1.0, 4.5, 12.0, 80.0])
def test_digamma_matches_mpmath(x):
    assert digamma(x) == pytest.approx(float(mp.digamma(x)), rel=1e-12, abs=1e-13)


def test_digamma_domain():
    with pytest.raises(ValueError):
        digamma(-2.5)


def test_euler_gamma():
    assert abs(EULER_GAMMA - 0.5772156649) <= 1e-10


def test_zeta_examples():
    assert zeta_em(2.0) == pytest.approx(math.pi ** 2 / 6, abs=1e-12)
    assert zeta_em(4.0) == pytest.approx(math.pi ** 4 / 90, abs=1e-12)
    assert zeta_em(0.0) == pytest.approx(-0.5, abs=1e-12)
    assert zeta_em(-1.0) == pytest.approx(-1 / 12, abs=1e-12)


def test_zeta_pole():
    with pytest.raises(PoleError):
        zeta_em(1.0)
    with pytest.raises(PoleError):
        zeta_deriv(1.0)


@pytest.mark.parametrize("s", [-29.5, -17.2, -10.0, -3.3, -0.7, -0.5, 0.2, 0.999, 1.001, 1.5, 3.0, 12.5, 30.0])
def test_zeta_matches_mpmath(s):
    exact = float(mp.zeta(s))
    # absolute 1e-12 where |zeta| is O(1); relative where it is huge
    assert abs(zeta_em(s) - exact) <= 1e-12 * max(1.0, abs(exact))


@pytest.mark.parametrize("h", range(1, 30))
def test_zeta_negative_integers_bernoulli(h):
    target = -bernoulli(h + 1) / (h + 1)
    assert abs(zeta_em(-h) - float(target)) <= 1e-12 * max(1.0, abs(float(target)))


@pytest.mark.parametrize("h", [2, 4, 10, 20, 30])
def test_trivial_zeros_are_exact(h):
    assert zeta_em(-float(h)) == 0.0


def test_zeta_deriv_examples():
    assert zeta_deriv(0.0) == pytest.approx(-math.log(2 * math.pi) / 2, abs=1e-10)
    assert zeta_deriv(2.0) == pytest.approx(-0.9375482543, abs=1e-10)
    # sign fixed by central differences of zeta itself
    h = 1e-4
    fd = (zeta_em(-2 + h) - zeta_em(-2 - h)) / (2 * h)
    assert fd < 0
    assert zeta_deriv(-2.0) == pytest.approx(fd, abs=1e-6)
    assert zeta_deriv(-2.0) == pytest.approx(-zeta_em(3.0) / (4 * math.pi ** 2), abs=1e-10)


@pytest.mark.parametrize("s", [-2.5, -0.5, 0.0, 2.0, 3.0])
def test_zeta_deriv_central_differences(s):
    h = 1e-5
    fd = (zeta_em(s + h) - zeta_em(s - h)) / (2 * h)
    assert abs(zeta_deriv(s) - fd) <= 1e-6


@pytest.mark.parametrize("s", [-10.0, -7.5, -3.0, -1.0, -0.4, 0.5, 1.2, 4.0, 10.0])
def test_zeta_deriv_matches_mpmath(s):
    assert abs(zeta_deriv(s) - float(mp.zeta(s, derivative=1))) <= 1e-10


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=-20, max_value=20).filter(lambda s: abs(s - 1) > 1e-3))
def test_zeta_property_against_mpmath(s):
    exact = float(mp.zeta(s))
    assert abs(zeta_em(s) - exact) <= 1e-11 * max(1.0, abs(exact))
