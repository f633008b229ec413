"""Closed-form asymptotics for p_{kappa,m}(n).

The saddle-point main term exp(L(u) + n u) / sqrt(2 pi L''(u)) is expanded
around t = (beta / n)^(1/(1+alpha)). The saddle equation is inverted with
Bürmann's theorem on truncated power series, and the exponent is then read
off as a series in t, which gives the lambda constants.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import INF, m_label, parse_m
from .numerics import gamma_fn, zeta_em
from .pszeta import ZetaValue, ps_zeta_deriv_zero, ps_zeta_zero
from .sequence import KappaParam, as_kappa
from .series import PowerSeries

DEFAULT_DERIV_N = 1_000_000


@dataclass(frozen=True)
class ExpansionCoefficients:
    """L(t) = a - b log t + sum_h c_h t^(h - alpha) + smaller terms, as t -> 0+."""

    a: float
    b: float
    c: tuple[float, ...]
    alpha: float
    a_error: float = 0.0

    def __post_init__(self):
        if not self.c or self.c[0] <= 0.0:
            raise ValueError("c_0 must be positive")
        if self.alpha <= 0.0:
            raise ValueError("alpha must be positive")


def burmann_revert(P: PowerSeries, alpha: float, J: int) -> PowerSeries:
    """Invert t = u (1 + u P(u))^(-1/(1+alpha)) for u as a series in t.

    Uses u = sum_{j>=0} t^(j+1)/(j+1) [z^j] (1 + z P(z))^((j+1)/(1+alpha)),
    so the derivatives at 0 are read off as series coefficients. Returns a
    series of order J + 1.
    """
    if J < 1:
        raise ValueError("J must be >= 1")
    order = J + 1
    p = PowerSeries(P.coefficients, order)
    base = PowerSeries.constant(1.0, order) + PowerSeries.variable(order) * p
    u = np.zeros(order + 1)
    for j in range(J + 1):
        u[j + 1] = base.power((j + 1) / (alpha + 1.0))[j] / (j + 1)
    return PowerSeries(u)


def forward_map(u: PowerSeries, P: PowerSeries, alpha: float) -> PowerSeries:
    """t = u (1 + u P(u))^(-1/(1+alpha)) for a series u(t); the round-trip check."""
    order = u.order
    p = PowerSeries(P.coefficients, order)
    inner = PowerSeries.constant(1.0, order) + u * p.compose(u)
    return u * inner.power(-1.0 / (alpha + 1.0))


def _p_series(E: ExpansionCoefficients, order: int) -> PowerSeries:
    alpha, c = E.alpha, E.c
    coeffs = [(alpha - h) * c[h] / (alpha * c[0]) for h in range(1, len(c))]
    return PowerSeries(coeffs or [0.0], order)


def lambda_coefficients(E: ExpansionCoefficients, J: int) -> np.ndarray:
    """lambda_0 .. lambda_J with sum_h c_h (alpha-h+1) u^(h-alpha) = t^-alpha sum_j lambda_j t^j."""
    if J < 0:
        raise ValueError("J must be >= 0")
    alpha, c = E.alpha, E.c
    order = max(J, 1)
    u = burmann_revert(_p_series(E, order), alpha, order)
    # u = t V(t), V(0) = 1
    V = PowerSeries(u.coefficients[1:], order)
    t = PowerSeries.variable(order)
    total = PowerSeries.constant(0.0, order)
    for h, ch in enumerate(c):
        if ch == 0.0 or h > order:
            continue
        total = total + (t.power(h) * V.power(h - alpha)) * (ch * (alpha - h + 1.0))
    return total.coefficients[: J + 1].copy()


def closed_form_lambdas(alpha: float, c) -> tuple[float, float, float, float]:
    """Closed forms for lambda_0 .. lambda_3 (c padded with zeros)."""
    c = list(c) + [0.0] * 4
    l0 = c[0] * (alpha + 1.0)
    l1 = c[1]
    l2 = c[2] - (alpha - 1.0) ** 2 * l1 ** 2 / (2.0 * alpha * l0)
    l3 = (c[3] - (alpha - 1.0) * (alpha - 2.0) * l1 * l2 / (alpha * l0)
          - (alpha - 4.0) * (alpha - 1.0) ** 3 * l1 ** 3 / (6.0 * alpha ** 2 * l0 ** 2))
    return l0, l1, l2, l3


def expansion_coefficients(kappa, m=INF, deriv_N: int = DEFAULT_DERIV_N) -> ExpansionCoefficients:
    """Small-x expansion of L_kappa(x) (m = inf) or L_kappa(x) - L_kappa((m+1)x)."""
    kp = as_kappa(kappa)
    m = parse_m(m)
    alpha = kp.alpha
    g = gamma_fn(alpha + 1.0)
    hs = range(kp.ceil_alpha)
    c = [g * zeta_em(alpha - h + 1.0) / math.factorial(h + 1) for h in hs]
    z0 = float(ps_zeta_zero(kp))
    if m == INF:
        zd = ps_zeta_deriv_zero(kp, deriv_N)
        return ExpansionCoefficients(zd.value, z0, tuple(c), alpha, zd.error_bound)
    scaled = tuple(ch * (1.0 - (m + 1.0) ** (h - alpha)) for h, ch in zip(hs, c))
    return ExpansionCoefficients(z0 * math.log(m + 1.0), 0.0, scaled, alpha, 0.0)


@dataclass(frozen=True)
class AsymptoticModel:
    kappa: KappaParam
    m: int | float
    beta: float
    delta: Fraction
    lambda_c: float
    lambdas: tuple[float, ...]
    lambda_c_rel_error: float = 0.0
    zeta0: Fraction = Fraction(-1, 2)
    zeta_deriv0: ZetaValue | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def alpha(self) -> float:
        return self.kappa.alpha

    def exponent_terms(self, n: float) -> np.ndarray:
        """lambda(h) (n/beta)^((alpha-h)/(alpha+1)) for each retained h."""
        alpha = self.alpha
        r = n / self.beta
        return np.array([lam * r ** ((alpha - h) / (alpha + 1.0))
                         for h, lam in enumerate(self.lambdas)])

    def to_dict(self) -> dict:
        out = {
            "kappa": str(self.kappa),
            "m": m_label(self.m),
            "alpha": self.alpha,
            "beta": self.beta,
            "delta": str(self.delta),
            "delta_float": float(self.delta),
            "lambda_c": self.lambda_c,
            "lambda_c_rel_error": self.lambda_c_rel_error,
            "lambda": list(self.lambdas),
            "zeta_kappa_0": str(self.zeta0),
        }
        if self.zeta_deriv0 is not None:
            out["zeta_kappa_deriv_0"] = {
                "value": self.zeta_deriv0.value,
                "error_bound": self.zeta_deriv0.error_bound,
                "method": self.zeta_deriv0.method,
            }
        out.update(self.extra)
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def theorem_constants(kappa, m=INF, deriv_N: int = DEFAULT_DERIV_N) -> AsymptoticModel:
    """beta, delta, lambda_c and lambda(0..floor(alpha)) for p_{kappa,m}."""
    kp = as_kappa(kappa)
    m = parse_m(m)
    alpha = kp.alpha
    E = expansion_coefficients(kp, m, deriv_N)
    beta = alpha * E.c[0]
    z0 = ps_zeta_zero(kp)
    a_exact = kp.alpha_exact
    delta = Fraction(1, 2) + (Fraction(1, 2) - (z0 if m == INF else 0)) / (1 + a_exact)

    J = kp.ceil_alpha + 2
    lam = lambda_coefficients(E, J)
    keep = math.floor(alpha) if not kp.alpha_is_integer else int(a_exact)
    lambdas = tuple(float(x) for x in lam[: keep + 1])

    lambda_c = math.exp(E.a) / math.sqrt(2.0 * math.pi * beta * (alpha + 1.0))
    zd = None
    rel = 0.0
    if m == INF:
        zd = ps_zeta_deriv_zero(kp, deriv_N)
        rel = math.expm1(zd.error_bound)
    return AsymptoticModel(kp, m, beta, delta, lambda_c, lambdas, rel, z0, zd,
                           {"lambda_full": [float(x) for x in lam], "c": list(E.c)})


def asymptotic_estimate(n, model: AsymptoticModel) -> float:
    """log of lambda_c (beta/n)^delta exp(sum_h lambda(h) (n/beta)^((alpha-h)/(alpha+1)))."""
    n = float(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    return (math.log(model.lambda_c) + float(model.delta) * math.log(model.beta / n)
            + math.fsum(model.exponent_terms(n)))
