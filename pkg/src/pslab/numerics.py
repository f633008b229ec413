"""Scalar special functions: Bernoulli numbers, Gamma, digamma, zeta and zeta'.

Everything here works in double precision. ``zeta_em`` and ``zeta_deriv`` use
Euler-Maclaurin summation with a fixed cutoff and correction order; for
``s < -1/2`` they switch to the functional equation so that no large
cancellation occurs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ._errors import PoleError

EULER_GAMMA = 0.57721566490153286061

# Euler-Maclaurin cutoff and number of Bernoulli corrections.
_EM_N = 20
_EM_M = 14
# Below this, evaluate through the reflection formula.
_REFLECT_BELOW = -0.5

_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(k: int) -> Fraction:
    """Return the Bernoulli number B_k with the convention B_1 = -1/2."""
    if k < 0:
        raise ValueError("k must be non-negative")
    table = _bernoulli_cache
    while len(table) <= k:
        j = len(table)
        # sum_{h=0}^{j} C(j+1, h) B_h = 0
        acc = sum(math.comb(j + 1, h) * table[h] for h in range(j))
        table.append(-acc / (j + 1))
    return table[k]


@lru_cache(maxsize=None)
def _bernoulli_float(k: int) -> float:
    return float(bernoulli(k))


def gamma_fn(x: float) -> float:
    """Gamma function on the real line (poles at 0, -1, -2, ...)."""
    if x <= 0 and float(x).is_integer():
        raise PoleError(f"Gamma has a pole at {x}")
    if x < 0.5:
        # reflection keeps the argument handed to math.gamma positive
        return math.pi / (math.sin(math.pi * x) * math.gamma(1.0 - x))
    return math.gamma(x)


def digamma(x: float) -> float:
    """Logarithmic derivative of Gamma for x > 0."""
    if x <= 0:
        raise ValueError("digamma implemented for x > 0 only")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for k in range(1, 10):
        series += _bernoulli_float(2 * k) / (2 * k) * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series


def _pochhammer_and_derivative(s: float, j: int) -> tuple[float, float]:
    """Return ((s)_j, d/ds (s)_j) for the rising factorial s(s+1)...(s+j-1)."""
    value = 1.0
    deriv = 0.0
    for i in range(j):
        # product rule, one factor at a time
        deriv = deriv * (s + i) + value
        value *= s + i
    return value, deriv


def _zeta_em_core(s: float) -> float:
    n = _EM_N
    head = math.fsum(k ** (-s) for k in range(1, n))
    total = head + n ** (1.0 - s) / (s - 1.0) + 0.5 * n ** (-s)
    for k in range(1, _EM_M + 1):
        poch, _ = _pochhammer_and_derivative(s, 2 * k - 1)
        total += (_bernoulli_float(2 * k) / math.factorial(2 * k)
                  * poch * n ** (-s - 2 * k + 1))
    return total


def _zeta_deriv_em_core(s: float) -> float:
    n = _EM_N
    log_n = math.log(n)
    head = -math.fsum(math.log(k) * k ** (-s) for k in range(2, n))
    d = s - 1.0
    total = head + n ** (1.0 - s) * (-log_n / d - 1.0 / (d * d))
    total -= 0.5 * log_n * n ** (-s)
    for k in range(1, _EM_M + 1):
        poch, dpoch = _pochhammer_and_derivative(s, 2 * k - 1)
        scale = _bernoulli_float(2 * k) / math.factorial(2 * k) * n ** (-s - 2 * k + 1)
        total += scale * (dpoch - log_n * poch)
    return total


def _sincos_pi(x: float) -> tuple[float, float]:
    """sin(pi x), cos(pi x) with exact zeros at (half-)integers."""
    r = math.fmod(x, 2.0)
    if r < 0:
        r += 2.0
    quarter = round(r * 2.0)
    if quarter * 0.5 == r:
        return ((0.0, 1.0), (1.0, 0.0), (0.0, -1.0), (-1.0, 0.0), (0.0, 1.0))[quarter]
    return math.sin(math.pi * r), math.cos(math.pi * r)


def _chi(s: float) -> tuple[float, float]:
    """Functional-equation factor chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s)
    and its derivative, for s < 1/2."""
    base = 2.0 ** s * math.pi ** (s - 1.0) * math.gamma(1.0 - s)
    sin_part, cos_part = _sincos_pi(0.5 * s)
    log_term = math.log(2.0 * math.pi) - digamma(1.0 - s)
    value = base * sin_part
    deriv = base * (log_term * sin_part + 0.5 * math.pi * cos_part)
    return value, deriv


def zeta_em(s: float) -> float:
    """Riemann zeta function for real s != 1."""
    s = float(s)
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if s < _REFLECT_BELOW:
        chi, _ = _chi(s)
        return chi * _zeta_em_core(1.0 - s)
    return _zeta_em_core(s)


def zeta_deriv(s: float) -> float:
    """Derivative zeta'(s) for real s != 1."""
    s = float(s)
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if s < _REFLECT_BELOW:
        chi, dchi = _chi(s)
        return dchi * _zeta_em_core(1.0 - s) - chi * _zeta_deriv_em_core(1.0 - s)
    return _zeta_deriv_em_core(s)
