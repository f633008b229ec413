"""Saddle-point evaluation of p_{kappa,m}(n).

L_kappa(x) = -sum_l log(1 - exp(-x floor(l^kappa))) is summed over distinct
part values until x v exceeds ``CUTOFF``, with a geometric bound on the rest.
For a finite cap m the relevant function is L(x) - L((m+1)x).
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ._errors import BracketError
from .exact import INF, parse_m
from .numerics import gamma_fn, zeta_em
from .pszeta import ps_zeta_deriv_zero, ps_zeta_zero
from .sequence import KappaParam, as_kappa, part_groups

CUTOFF = 50.0
RESIDUAL_TOL = 1e-9


def beta_constant(kappa, m=INF) -> float:
    """alpha Gamma(alpha+1) zeta(alpha+1) (1 - (m+1)^-alpha)."""
    kp = as_kappa(kappa)
    m = parse_m(m)
    alpha = kp.alpha
    beta = alpha * gamma_fn(alpha + 1.0) * zeta_em(alpha + 1.0)
    if m != INF:
        beta *= 1.0 - (m + 1.0) ** (-alpha)
    return beta


def _groups_for(x: float, kp: KappaParam):
    # power-of-two bounds keep the cached group tables reusable across x
    bound = 1 << max(4, math.ceil(math.log2(CUTOFF / x)))
    values, weights = part_groups(bound, kp)
    return bound, values.astype(float), weights.astype(float)


def _tail_bound(x: float, j: int, kp: KappaParam, V: int) -> float:
    # |term| <= w_v v^j e^{-xv} / (1 - e^{-xv})^2 with w_v <= alpha (v+1)^(alpha-1) + 1
    alpha = kp.alpha
    k = j + max(alpha - 1.0, 0.0)
    ratio = math.exp(-x) * (1.0 + 1.0 / (V + 1)) ** k
    if ratio >= 1.0:
        return math.inf
    first = (alpha + 2.0) * (V + 1.0) ** k * math.exp(-x * (V + 1))
    return 1.01 * first / (1.0 - ratio)


def _big_l_single(x: float, j: int, kp: KappaParam) -> tuple[float, float]:
    V, v, w = _groups_for(x, kp)
    xv = x * v
    if j == 0:
        terms = -w * np.log1p(-np.exp(-xv))
    elif j == 1:
        terms = -w * v / np.expm1(xv)
    elif j == 2:
        em1 = np.expm1(xv)
        terms = w * v * v * (em1 + 1.0) / (em1 * em1)
    else:
        raise ValueError("derivative order must be 0, 1 or 2")
    # smallest terms first
    return math.fsum(terms[::-1]), _tail_bound(x, j, kp, V)


def big_l_with_bound(x: float, j: int, kappa, m=INF) -> tuple[float, float]:
    """j-th derivative of L_kappa(x) (or of L(x) - L((m+1)x)) and a tail bound."""
    if not x > 0:
        raise ValueError("x must be positive")
    kp = as_kappa(kappa)
    m = parse_m(m)
    value, bound = _big_l_single(float(x), j, kp)
    if m != INF:
        scale = m + 1.0
        v2, b2 = _big_l_single(scale * x, j, kp)
        value -= scale ** j * v2
        bound += scale ** j * b2
    return value, bound


def big_l(x: float, j: int, kappa, m=INF) -> float:
    """L_kappa^(j)(x), m-adjusted for finite caps."""
    return big_l_with_bound(x, j, kappa, m)[0]


def mellin_expansion(x: float, j: int, kappa, deriv_N: int = 1_000_000) -> float:
    """d^j/dx^j of sum_{h<alpha} c_h x^(h-alpha) - zeta_kappa(0) log x + zeta_kappa'(0)."""
    if not x > 0:
        raise ValueError("x must be positive")
    if j not in (0, 1, 2):
        raise ValueError("derivative order must be 0, 1 or 2")
    kp = as_kappa(kappa)
    alpha = kp.alpha
    g = gamma_fn(alpha + 1.0)
    b = float(ps_zeta_zero(kp))
    total = 0.0
    for h in range(kp.ceil_alpha):
        c = g * zeta_em(alpha - h + 1.0) / math.factorial(h + 1)
        e = h - alpha
        coef = 1.0
        for i in range(j):
            coef *= e - i
        total += c * coef * x ** (e - j)
    if j == 0:
        total += -b * math.log(x) + ps_zeta_deriv_zero(kp, deriv_N).value
    elif j == 1:
        total += -b / x
    else:
        total += b / (x * x)
    return total


class SaddleResult(NamedTuple):
    n: int
    m: int | float
    x: float
    log_estimate: float
    estimate: float
    l_values: tuple[float, float, float]
    kappa: KappaParam | None = None


def _saddle_function(x: float, n: int, kp: KappaParam, m) -> tuple[float, float]:
    return big_l(x, 1, kp, m) + n, big_l(x, 2, kp, m)


def solve_saddle(n: int, kappa, m=INF, max_iter: int = 200) -> SaddleResult:
    """Root of L'(x) + n = 0 (m-adjusted), by Newton safeguarded with bisection."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    kp = as_kappa(kappa)
    m = parse_m(m)
    x0 = (beta_constant(kp, m) / n) ** (1.0 / (1.0 + kp.alpha))
    lo, hi = x0 / 8.0, 8.0 * x0
    f_lo = _saddle_function(lo, n, kp, m)[0]
    f_hi = _saddle_function(hi, n, kp, m)[0]
    widen = 0
    # f is increasing: need f(lo) < 0 < f(hi)
    while (f_lo > 0 or f_hi < 0) and widen < 6:
        if f_lo > 0:
            lo /= 8.0
            f_lo = _saddle_function(lo, n, kp, m)[0]
        if f_hi < 0:
            hi *= 8.0
            f_hi = _saddle_function(hi, n, kp, m)[0]
        widen += 1
    if f_lo > 0 or f_hi < 0:
        raise BracketError(f"saddle not bracketed for n={n}, kappa={kp}, m={m}")

    x = min(max(x0, lo), hi)
    for _ in range(max_iter):
        f, df = _saddle_function(x, n, kp, m)
        if abs(f) <= RESIDUAL_TOL * n:
            break
        if f < 0:
            lo = x
        else:
            hi = x
        step = x - f / df if df > 0 else math.nan
        x = step if lo < step < hi else 0.5 * (lo + hi)
        if hi - lo <= 1e-17 * hi:
            break
    else:
        raise BracketError(f"saddle iteration did not converge for n={n}")

    L0 = big_l(x, 0, kp, m)
    L1 = big_l(x, 1, kp, m)
    L2 = big_l(x, 2, kp, m)
    return SaddleResult(n, m, x, math.nan, math.nan, (L0, L1, L2), kp)


def saddle_estimate(n: int, kappa, m=INF) -> SaddleResult:
    """exp(L + n x) / sqrt(2 pi L'') at the saddle, m-adjusted; log form is authoritative."""
    res = solve_saddle(n, kappa, m)
    L0, _, L2 = res.l_values
    log_est = L0 + res.n * res.x - 0.5 * math.log(2.0 * math.pi * L2)
    try:
        est = math.exp(log_est)
    except OverflowError:
        est = math.inf
    return res._replace(log_estimate=log_est, estimate=est)
