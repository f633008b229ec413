"""Golden-constant checks against classical closed-form asymptotics."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, NamedTuple

from .asymptotics import theorem_constants
from .numerics import zeta_deriv, zeta_em
from .pszeta import ps_zeta_deriv_zero, remark_identity_gap

Z2 = math.pi ** 2 / 6.0
Z3 = zeta_em(3.0)


class Check(NamedTuple):
    name: str
    passed: bool
    value: float
    expected: float
    tol: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: value={self.value!r} expected={self.expected!r} "
                f"tol={self.tol:g}")


def _close(name: str, value, expected, tol: float) -> Check:
    value, expected = float(value), float(expected)
    return Check(name, abs(value - expected) <= tol, value, expected, tol)


def _exact(name: str, value, expected) -> Check:
    return Check(name, value == expected, float(value), float(expected), 0.0)


def coefficient_of_power(model, h: int) -> float:
    """Coefficient of n^((alpha-h)/(alpha+1)) in the exponent."""
    alpha = model.alpha
    return model.lambdas[h] * model.beta ** (-(alpha - h) / (alpha + 1.0))


def prefactor(model) -> float:
    """lambda_c beta^delta exp(lambda(alpha)) when alpha is an integer, else lambda_c beta^delta.

    The result multiplies n^(-delta) exp(non-constant exponent terms).
    """
    out = model.lambda_c * model.beta ** float(model.delta)
    if model.kappa.alpha_is_integer:
        out *= math.exp(model.lambdas[-1])
    return out


def hardy_ramanujan_checks() -> list[Check]:
    p = theorem_constants(1, "inf")
    q = theorem_constants(1, 1)
    return [
        _close("p(n) beta = pi^2/6", p.beta, Z2, 1e-10),
        _exact("p(n) delta = 1", p.delta, Fraction(1)),
        _close("p(n) lambda_c*beta = 1/(4 sqrt 3)", p.lambda_c * p.beta, 1 / (4 * math.sqrt(3)), 1e-10),
        _close("p(n) exponent pi sqrt(2/3)", coefficient_of_power(p, 0), math.pi * math.sqrt(2 / 3), 1e-10),
        _close("p(n) constant exponent term", p.lambdas[1], 0.0, 1e-12),
        _close("q(n) beta = pi^2/12", q.beta, Z2 / 2, 1e-10),
        _exact("q(n) delta = 3/4", q.delta, Fraction(3, 4)),
        _close("q(n) prefactor 1/(4 3^(1/4))", prefactor(q), 1 / (4 * 3 ** 0.25), 1e-10),
        _close("q(n) exponent pi/sqrt 3", coefficient_of_power(q, 0), math.pi / math.sqrt(3), 1e-10),
    ]


def square_root_checks() -> list[Check]:
    p = theorem_constants(Fraction(1, 2), "inf")
    q = theorem_constants(Fraction(1, 2), 1)
    zd = zeta_deriv(0.0) + 2 * zeta_deriv(-1.0)
    p_pref = (2 ** (5 / 18) * 3 ** -0.5 * math.pi ** -0.5 * Z3 ** (7 / 18) * math.exp(zd))
    q_pref = 2 ** (-7 / 6) * 3 ** (-1 / 3) * math.pi ** -0.5 * Z3 ** (1 / 6)
    return [
        _exact("p_1/2 delta = 8/9", p.delta, Fraction(8, 9)),
        _close("p_1/2 n^(2/3) coefficient", coefficient_of_power(p, 0), 3 * Z3 ** (1 / 3) / 2 ** (1 / 3), 1e-9),
        _close("p_1/2 n^(1/3) coefficient", coefficient_of_power(p, 1), Z2 / (2 ** (2 / 3) * Z3 ** (1 / 3)), 1e-9),
        _close("p_1/2 constant exponent term", p.lambdas[2], -Z2 ** 2 / (24 * Z3), 1e-9),
        _close("p_1/2 prefactor", p.lambda_c * p.beta ** float(p.delta), p_pref, 1e-8),
        _exact("q_1/2 delta = 2/3", q.delta, Fraction(2, 3)),
        _close("q_1/2 beta = 3 zeta(3)", q.beta, 3 * Z3, 1e-10),
        _close("q_1/2 n^(2/3) coefficient", coefficient_of_power(q, 0), 3 ** (4 / 3) * Z3 ** (1 / 3) / 2, 1e-9),
        _close("q_1/2 n^(1/3) coefficient", coefficient_of_power(q, 1), Z2 / (2 * 3 ** (1 / 3) * Z3 ** (1 / 3)), 1e-9),
        _close("q_1/2 constant exponent term", q.lambdas[2], -Z2 ** 2 / (72 * Z3), 1e-9),
        _close("q_1/2 prefactor", q.lambda_c * q.beta ** float(q.delta), q_pref, 1e-8),
    ]


def zeta_deriv_minus_two_fd(h: float = 1e-4) -> float:
    """zeta'(-2) by a fourth-order central difference of zeta itself."""
    f = zeta_em
    s = -2.0
    return (f(s - 2 * h) - 8 * f(s - h) + 8 * f(s + h) - f(s + 2 * h)) / (12 * h)


def cube_root_checks() -> list[Check]:
    p = theorem_constants(Fraction(1, 3), "inf")
    q = theorem_constants(Fraction(1, 3), 1)
    pi = math.pi
    fd = zeta_deriv_minus_two_fd()
    checks = [
        # sign of zeta'(-2) fixed independently of the derivative routine
        _close("zeta'(-2) = -zeta(3)/(4 pi^2) by finite differences", fd, -Z3 / (4 * pi ** 2), 1e-8),
        _exact("p_1/3 delta = 13/16", p.delta, Fraction(13, 16)),
        _exact("q_1/3 delta = 5/8", q.delta, Fraction(5, 8)),
    ]
    p_disp = [4 * pi / 15, 3 * Z3 / pi ** 2, (pi ** 6 - 135 * Z3 ** 2) / (6 * pi ** 5)]
    q_disp = [28 * pi / 15, 9 * Z3 / pi ** 2, (7 * pi ** 6 - 1215 * Z3 ** 2) / (42 * pi ** 5)]
    for h in range(3):
        e = (3 - h) / 4
        checks.append(_close(f"p_1/3 n^({3 - h}/4) coefficient", coefficient_of_power(p, h),
                             p_disp[h] * 5 ** e, 1e-8))
        checks.append(_close(f"q_1/3 n^({3 - h}/4) coefficient", coefficient_of_power(q, h),
                             q_disp[h] * (5 / 14) ** e, 1e-8))
    # prefactors of n^(-delta), including exp(lambda(3)); zeta'(-2) enters through zeta_kappa'(0)
    p_pref = ((25 * pi) ** 0.25 * math.exp(225 * Z3 ** 3 / pi ** 8 - 2 * Z3 / pi ** 2 + 3 * zeta_deriv(-1.0))
              / (4 * 5 ** (13 / 16)))
    q_pref = ((5 / 14) ** 0.5 * math.exp(6075 * Z3 ** 3 / (49 * pi ** 8) - 15 * Z3 / (28 * pi ** 2))
              / (2 ** (11 / 4) * (5 / 14) ** (5 / 8)))
    checks.append(_close("p_1/3 prefactor", prefactor(p), p_pref, 1e-8))
    checks.append(_close("q_1/3 prefactor", prefactor(q), q_pref, 1e-8))
    return checks


def kappa_gt_one_checks(kappa=2) -> list[Check]:
    """c_kappa and the exponent for kappa > 1 against the general beta, delta and lambda_c."""
    p = theorem_constants(kappa, "inf")
    q = theorem_constants(kappa, 1)
    alpha = p.alpha
    k = 1.0 / alpha
    beta = p.beta
    zd = ps_zeta_deriv_zero(kappa)
    c_p = math.sqrt(2) * math.exp(zd.value) * beta ** (1 / (1 + alpha)) / (2 * math.sqrt(math.pi * (1 + alpha)))
    b1 = (1 - 2 ** -alpha) * beta
    c_q = b1 ** (1 / (2 * (1 + alpha))) / (2 * math.sqrt(math.pi * (1 + alpha)))
    tol_p = max(1e-10, c_p * math.expm1(zd.error_bound))
    checks = [
        _exact(f"p_{kappa} delta = (alpha+3)/(2(1+alpha))", p.delta,
               (p.kappa.alpha_exact + 3) / (2 * (1 + p.kappa.alpha_exact))),
        _exact(f"q_{kappa} delta = (alpha+2)/(2(1+alpha))", q.delta,
               (q.kappa.alpha_exact + 2) / (2 * (1 + q.kappa.alpha_exact))),
        _close(f"p_{kappa} c_kappa", p.lambda_c * beta ** float(p.delta), c_p, tol_p),
        _close(f"q_{kappa} c_kappa1", q.lambda_c * q.beta ** float(q.delta), c_q, 1e-10),
        _close(f"p_{kappa} exponent coefficient", coefficient_of_power(p, 0),
               (1 + k) * beta ** (1 / (1 + alpha)), 1e-10),
        _close(f"q_{kappa} exponent coefficient", coefficient_of_power(q, 0),
               (1 + k) * b1 ** (1 / (1 + alpha)), 1e-10),
    ]
    if float(kappa).is_integer():
        kk = int(kappa)
        # floor(l^k) = l^k, so zeta_kappa(s) = zeta(k s)
        checks.append(_close(f"zeta_{kk}'(0) = -(k/2) log(2 pi)", zd.value,
                             -kk / 2 * math.log(2 * math.pi), max(zd.error_bound, 1e-10)))
    return checks


def log2pi_identity_checks(N: int = 1_000_000) -> list[Check]:
    out = []
    for k in (2, 3):
        g = remark_identity_gap(k, N)
        out.append(Check(f"log(2 pi) identity k={k}, N={N}: gap <= bound", g.gap <= g.bound,
                         g.gap, 0.0, g.bound))
    return out


SUITES: dict[str, list[Callable[[], list[Check]]]] = {
    "constants": [hardy_ramanujan_checks, square_root_checks, cube_root_checks,
                  kappa_gt_one_checks],
    "identity": [log2pi_identity_checks],
}
SUITES["all"] = SUITES["constants"] + SUITES["identity"]


def run_suite(name: str = "constants") -> list[Check]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    checks: list[Check] = []
    for fn in SUITES[name]:
        checks.extend(fn())
    return checks
