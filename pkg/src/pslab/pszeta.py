"""The Piatetski-Shapiro zeta function zeta_kappa(s) = sum_l floor(l**kappa)**(-s).

Integer alpha = 1/kappa reduces to a finite binomial combination of Riemann
zeta values. For non-integer alpha the function is continued to s > 0 by a
Taylor rearrangement in which the only slowly convergent piece is the
Dirichlet series of the sawtooth {n^alpha} - 1/2. Every truncated sum
returns a tail bound alongside its value.

Oscillating tails are bounded by Abel summation against an envelope
C n^(1 - sigma_alpha) log n for the sawtooth partial sums. The constant C is
not known explicitly; it is calibrated as 10 times the largest ratio
observed over [sqrt(N), N]. For alpha < 1 the log-weighted sawtooth tail in
zeta_kappa'(0) is instead evaluated through the jump points j^kappa, which
converges far faster.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from ._errors import DomainError, PoleError
from .numerics import gamma_fn, zeta_deriv, zeta_em
from .sequence import KappaParam, alpha_power_table, as_kappa, part_groups

# stated accuracy of zeta_em / zeta_deriv, used in propagated bounds
ZETA_ABS_TOL = 1e-12
ZETA_DERIV_ABS_TOL = 1e-10
ENVELOPE_SAFETY = 10.0
POLE_TOL = 1e-8

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(32)
_GL_THETA = 0.5 * (_GL_NODES + 1.0)
_GL_W = 0.5 * _GL_WEIGHTS


class ZetaValue(NamedTuple):
    value: float
    error_bound: float
    method: str


@dataclass(frozen=True)
class CanonicalFactor:
    """Weierstrass factor E_h(z) = (1 - z) exp(sum_{j<=h} z^j / j)."""

    order: int

    def log(self, z):
        return log_canonical_factor(self.order, z)

    def __call__(self, z):
        return np.exp(self.log(z))


def log_canonical_factor(h: int, z):
    """log E_h(z) for real |z| < 1, vectorised.

    Small |z| uses the tail series -sum_{j>h} z^j/j to avoid cancelling
    log(1 - z) against its own Taylor polynomial.
    """
    z = np.asarray(z, dtype=float)
    direct = np.log1p(-z)
    power = np.ones_like(z)
    for j in range(1, h + 1):
        power = power * z
        direct = direct + power / j
    small = np.abs(z) <= 0.125
    if not np.any(small):
        return direct
    zs = np.where(small, z, 0.0)
    tail = np.zeros_like(z)
    power = zs ** (h + 1)
    for j in range(h + 1, h + 40):
        tail -= power / j
        power = power * zs
    return np.where(small, tail, direct)


def power_tail(e: float, N: int) -> tuple[float, float]:
    """sum_{n > N} n^(-e) for e > 1 by Euler-Maclaurin, with an error bound."""
    if e <= 1.0:
        raise DomainError(f"power tail diverges for exponent {e}")
    N = float(N)
    est = N ** (1.0 - e) / (e - 1.0) - 0.5 * N ** (-e)
    est += e * N ** (-e - 1.0) / 12.0
    est -= e * (e + 1.0) * (e + 2.0) * N ** (-e - 3.0) / 720.0
    bound = 2.0 * e * (e + 1) * (e + 2) * (e + 3) * (e + 4) * N ** (-e - 5.0) / 30240.0
    return est, bound


def _series_tail(coeffs, exponents, N: int) -> tuple[float, float]:
    value = 0.0
    bound = 0.0
    for a, e in zip(coeffs, exponents):
        t, b = power_tail(e, N)
        value += a * t
        bound += abs(a) * b
    return value, bound


def sigma_values(kappa) -> tuple[float, float]:
    """(sigma_alpha, sigma_kappa).

    sigma_alpha is the van der Corput saving max_{m>=2} min(2^(1-m),
    (m - alpha)/(2^m - 1), 2^(1-m) alpha), scanned over m <= 64. For integer
    alpha it is undefined (nan) and sigma_kappa is reported as 1/2.
    """
    kp = as_kappa(kappa)
    if kp.alpha_is_integer:
        return math.nan, 0.5
    alpha = kp.alpha_exact if not kp.irrational else Fraction(kp.alpha)
    best = Fraction(0)
    for m in range(2, 65):
        cand = min(Fraction(2) ** (1 - m), (m - alpha) / (2 ** m - 1),
                   Fraction(2) ** (1 - m) * alpha)
        best = max(best, cand)
    sigma_alpha = float(best)
    sigma_kappa = min(sigma_alpha, 0.5, 1.0 - kp.frac_alpha)
    return sigma_alpha, sigma_kappa


def residue_at(h: int, kappa) -> float:
    """Residue of zeta_kappa at s = alpha - h, for 0 <= h < alpha."""
    kp = as_kappa(kappa)
    if not (0 <= h < kp.alpha):
        raise ValueError(f"h must satisfy 0 <= h < alpha = {kp.alpha}")
    if kp.alpha_is_integer:
        return float(math.comb(int(kp.alpha_exact), h + 1))
    return gamma_fn(kp.alpha + 1.0) / (math.factorial(h + 1) * gamma_fn(kp.alpha - h))


def poles(kappa) -> list[float]:
    kp = as_kappa(kappa)
    return [kp.alpha - h for h in range(kp.ceil_alpha)]


def ps_zeta_zero(kappa) -> Fraction:
    """zeta_kappa(0): -alpha/(alpha+1) for integer alpha, else -1/2."""
    kp = as_kappa(kappa)
    if kp.alpha_is_integer:
        a = kp.alpha_exact
        return -a / (a + 1)
    return Fraction(-1, 2)


def _check_pole(s: float, kp: KappaParam) -> None:
    for p in poles(kp):
        if abs(s - p) < POLE_TOL:
            raise PoleError(f"s={s} is within {POLE_TOL} of the pole {p}")


def _integer_alpha_zeta(s: float, kp: KappaParam) -> ZetaValue:
    a = int(kp.alpha_exact)
    terms = [math.comb(a, h) * zeta_em(s - h) for h in range(a)]
    bound = ZETA_ABS_TOL * sum(math.comb(a, h) * max(1.0, abs(t) / math.comb(a, h))
                               for h, t in enumerate(terms))
    return ZetaValue(math.fsum(terms), bound, "integer-alpha-formula")


def _abel_tail_bound(partial_sums: np.ndarray, sigma_alpha: float, N: int,
                     decay: float, first_weight: float) -> float:
    """Bound |sum_{n>N} a_n g(n)| for g positive decreasing with |g'(x)| <=
    decay_coeff x^(-decay-1) (decay_coeff folded into ``first_weight`` use).

    Uses |S_n| <= C n^(1 - sigma) log n with C calibrated on ``partial_sums``
    (indexed from n = 1).
    """
    C = _envelope_constant(partial_sums, sigma_alpha)
    a = decay + sigma_alpha - 1.0
    if a <= 0:
        return math.inf
    logN = math.log(N)
    integral = N ** (-a) * (logN / a + 1.0 / (a * a))
    return abs(float(partial_sums[N - 1])) * first_weight + C * decay * integral


def _envelope_constant(partial_sums: np.ndarray, sigma_alpha: float) -> float:
    # calibrate on [sqrt(N), N], the range that predicts the tail beyond N
    N = len(partial_sums)
    start = max(2, math.isqrt(N))
    n = np.arange(start, N + 1, dtype=float)
    ratio = np.abs(partial_sums[start - 1:]) / (n ** (1.0 - sigma_alpha) * np.log(n))
    return ENVELOPE_SAFETY * float(ratio.max()) if len(ratio) else ENVELOPE_SAFETY


def envelope_constant(kappa, N: int) -> float:
    """Calibrated constant C in |sum_{n<=x} ({n^alpha} - 1/2)| <= C x^(1-sigma_alpha) log x."""
    kp = as_kappa(kappa)
    sigma_alpha, _ = sigma_values(kp)
    _, frac, _ = alpha_power_table(N, kp)
    return _envelope_constant(np.cumsum(frac - 0.5), sigma_alpha)


def sawtooth_dirichlet(s: float, kappa, N: int = 100_000) -> ZetaValue:
    """hat-zeta_alpha(s) = sum_n ({n^alpha} - 1/2) n^(-s) for real s with an
    Abel tail bound; needs s > 1 - sigma_alpha."""
    kp = as_kappa(kappa)
    if kp.alpha_is_integer:
        z = zeta_em(s)
        return ZetaValue(-0.5 * z, 0.5 * ZETA_ABS_TOL, "integer-alpha-formula")
    sigma_alpha, _ = sigma_values(kp)
    if s <= 1.0 - sigma_alpha:
        raise DomainError(f"sawtooth series needs s > {1 - sigma_alpha}")
    _, frac, _ = alpha_power_table(N, kp)
    saw = frac - 0.5
    n = np.arange(1, N + 1, dtype=float)
    value = math.fsum(saw * n ** (-s))
    bound = _abel_tail_bound(np.cumsum(saw), sigma_alpha, N, s, N ** (-s))
    return ZetaValue(value, bound, "direct")


def _log_weight(x):
    """g(x) = -log(1 - 1/x), the weight of the sawtooth in zeta_kappa'(0)."""
    return -np.log1p(-1.0 / np.asarray(x, dtype=float))


def _dual_sawtooth_tail(kp: KappaParam, N: int, J_max: int | None = None,
                        chunk: int = 1_000_000) -> tuple[float, float]:
    """sum_{n>N} ({n^alpha} - 1/2) g(n) for alpha < 1.

    Between the jump points c_j = j^kappa the summand is smooth, so
        tail = int_N^oo f - f(N)/2 + int_N^oo B1(x) f'(x) dx - sum_{c_j>N} B(c_j-) g(c_j)
    with f(x) = B1(x^alpha) g(x) and B(c-) the left limit of the sawtooth at
    c. The integral is evaluated in u = x^alpha, the jump sum directly up to
    j = J_max; the B1 f' term and both cut-offs enter the bound only.
    """
    kappa = kp.kappa_float
    alpha = kp.alpha
    u0 = N ** alpha
    j0 = math.floor(u0)
    if kp.alpha_is_integer or alpha >= 1.0:
        raise DomainError("dual tail needs alpha < 1")
    if J_max is None:
        # integer kappa: the jump tail is an exact series, only W(J) matters
        J_max = 100_000 if KappaParam(kp.alpha_exact).alpha_is_integer else 4_000_000
    J_max = max(J_max, 4 * (j0 + 2))
    # W is smooth on each unit interval (relative width <= 1/j0)
    nodes, weights = np.polynomial.legendre.leggauss(8 if j0 >= 16 else 16)

    def W(u):
        return kappa * u ** (kappa - 1.0) * _log_weight(u ** kappa)

    def interval_integrals(lo, hi, base):
        # int_lo^hi (u - base - 1/2) W(u) du, vectorised over intervals
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        u = mid[:, None] + half[:, None] * nodes[None, :]
        vals = (u - base[:, None] - 0.5) * W(u)
        return half * (vals @ weights)

    integral = float(interval_integrals(np.array([u0]), np.array([j0 + 1.0]),
                                        np.array([float(j0)]))[0])
    parts = []
    for start in range(j0 + 1, J_max, chunk):
        stop = min(start + chunk, J_max)
        lo = np.arange(start, stop, dtype=float)
        parts.append(math.fsum(interval_integrals(lo, lo + 1.0, lo)))
    integral += math.fsum(parts)
    # remaining unit intervals: midpoint Euler-Maclaurin gives -W(J)/12,
    # next terms are O(W''(J)) and W ~ kappa/u
    wJ = float(W(np.array([float(J_max)]))[0])
    integral -= wJ / 12.0
    bound = abs(wJ) / float(J_max) ** 2

    saw_N = float(kp_sawtooth(N, kp))
    estimate = integral - 0.5 * saw_N * float(_log_weight(N))

    # jump sum over c_j = j^kappa in (N, c_{J_max}]
    dual = KappaParam(kp.alpha_exact, irrational=kp.irrational)
    powers, frac, is_int = alpha_power_table(J_max, dual)
    first = int(np.searchsorted(powers, N, side="right"))  # first j with j^kappa > N, 0-based
    c = powers[first:]
    left = np.where(is_int[first:], 0.5, frac[first:] - 0.5)
    estimate -= math.fsum(left * _log_weight(c))
    cJ = J_max ** kappa
    if dual.alpha_is_integer:
        # every jump point is an integer, B = 1/2 and g(j^k) = sum_i j^(-k i)/i
        k = int(dual.alpha_exact)
        I = max(3, 40 // k + 2)
        tv, tb = _series_tail([1.0 / i for i in range(1, I + 1)],
                              [k * i for i in range(1, I + 1)], J_max)
        estimate -= 0.5 * tv
        bound += 0.5 * (tb + power_tail(k * (I + 1), J_max)[0])
    else:
        # |B| <= 1/2 and g(x) <= 1/(x-1), or Abel against the jump partial sums
        absolute = 0.5 * (J_max ** (1.0 - kappa) / (kappa - 1.0)) * cJ / (cJ - 1.0)
        sigma_dual, _ = sigma_values(dual)
        partial = np.cumsum(np.where(is_int, 0.5, frac - 0.5))
        abel = (cJ / (cJ - 1.0)) * _abel_tail_bound(
            partial, sigma_dual, J_max, kappa, float(_log_weight(cJ)))
        bound += min(absolute, abel)

    # int B1(x) f'(x) dx: at most a quarter of the total variation of f'
    r = N / (N - 1.0)
    tv = alpha * r * N ** (alpha - 2.0) * (1.0 + 1.0 / (2.0 - alpha))
    tv += r * r / (2.0 * N * N)
    tv += r * (j0 ** (1.0 - 2.0 * kappa) / (2.0 * kappa - 1.0) if j0 else 1.0)
    bound += 0.25 * tv
    return estimate, bound


def kp_sawtooth(n: int, kp: KappaParam) -> float:
    """{n^alpha} - 1/2 with an exact floor."""
    _, frac, _ = alpha_power_table(n, kp)
    return float(frac[n - 1]) - 0.5


def sawtooth_log_sum(kappa, N: int, tail: str = "auto") -> tuple[float, float]:
    """sum_{n>=2} ({n^alpha} - 1/2) g(n), g(n) = -log(1 - 1/n), with a bound.

    Terms n <= N are summed directly. ``tail="abel"`` bounds the rest by
    Abel summation against the calibrated van der Corput envelope and
    estimates it as zero; ``tail="dual"`` (alpha < 1 only) evaluates it
    through the jump points j^kappa. ``"auto"`` picks dual when possible.
    """
    kp = as_kappa(kappa)
    if tail == "auto":
        tail = "dual" if kp.alpha < 1.0 else "abel"
    _, frac, _ = alpha_power_table(N, kp)
    saw = frac - 0.5
    n = np.arange(2, N + 1, dtype=float)
    g = _log_weight(n)
    head = math.fsum(saw[1:] * g)
    if tail == "dual":
        est, bound = _dual_sawtooth_tail(kp, N)
        return head + est, bound
    if tail != "abel":
        raise ValueError(f"unknown tail mode {tail!r}")
    sigma_alpha, _ = sigma_values(kp)
    partial = np.cumsum(saw)
    # |g'(x)| = 1/(x(x-1)) <= (N/(N-1)) x^-2 for x >= N
    bound = (N / (N - 1.0)) * _abel_tail_bound(partial, sigma_alpha, N, 1.0, 0.0)
    bound += abs(float(partial[-1])) * float(g[-1])
    return head, bound


def _pochhammer(x: float, j: int) -> float:
    out = 1.0
    for i in range(j):
        out *= x + i
    return out


def _remainder_terms(s: float, kp: KappaParam, N: int) -> tuple[float, float]:
    """R_alpha(s) of the continuation, truncated at n <= N with tails."""
    H = kp.ceil_alpha
    d = kp.d_alpha
    n = np.arange(2, N + 1, dtype=float)
    theta = _GL_THETA[:, None]
    w = _GL_W[:, None]
    value = 0.0
    bound = 0.0

    # perfect-power indicator part
    if d is not None:
        K = N
        k = np.arange(2, K + 1, dtype=float)
        t = k ** (-d)
        integ = (w * (1.0 - theta * t) ** (-s - 1.0)).sum(axis=0)
        value -= math.fsum(k ** (-d * (s + 1.0)) * integ)
        # int_0^1 (1 - theta t)^(-s-1) = sum_j (s+1)_j t^j / (j+1)!
        coeffs = [_pochhammer(s + 1.0, j) / math.factorial(j + 1) for j in range(12)]
        exps = [d * (s + 1.0 + j) for j in range(12)]
        tv, tb = _series_tail(coeffs, exps, K)
        value -= tv
        bound += tb + abs(coeffs[-1]) * power_tail(exps[-1], K)[0]

    # fractional-part part
    _, frac, _ = alpha_power_table(N, kp)
    fr = frac[1:]
    integ2 = (w * (1.0 - theta) * (1.0 - theta / n) ** (-s - 2.0)).sum(axis=0)
    value -= (s + 1.0) * math.fsum(fr * n ** (-s - 2.0) * integ2)
    # {n^alpha} in [0,1): the tail lies between 0 and the full-weight tail
    coeffs2 = [_pochhammer(s + 2.0, j) * 1.0 / math.factorial(j + 2) * (j + 1)
               for j in range(12)]
    exps2 = [s + 2.0 + j for j in range(12)]
    full, fb = _series_tail(coeffs2, exps2, N)
    full = (s + 1.0) * full
    value -= 0.5 * full
    bound += 0.5 * abs(full) + (s + 1.0) * (fb + coeffs2[-1] * power_tail(exps2[-1], N)[0])

    # smooth power part
    q = s + H + 1.0
    e3 = s - kp.alpha + H + 1.0
    lead = _pochhammer(s + 1.0, H) / math.factorial(H)
    integ3 = (w * (1.0 - theta) ** H * (1.0 - theta / n) ** (-q)).sum(axis=0)
    value += lead * math.fsum(n ** (-e3) * integ3)
    # int_0^1 (1-theta)^H (1 - theta/n)^(-q) = sum_j (q)_j H!/(H+j+1)! n^(-j)
    coeffs3 = [lead * _pochhammer(q, j) * math.factorial(H) / math.factorial(H + j + 1)
               for j in range(16)]
    exps3 = [e3 + j for j in range(16)]
    tv, tb = _series_tail(coeffs3, exps3, N)
    value += tv
    bound += tb + abs(coeffs3[-1]) * power_tail(exps3[-1], N)[0]

    value -= math.fsum(_pochhammer(s + 1.0, l - 1) / math.factorial(l) for l in range(1, H + 1))
    return value, bound


def _continued_zeta(s: float, kp: KappaParam, N: int) -> ZetaValue:
    H = kp.ceil_alpha
    total = 0.0
    bound = 0.0
    for l in range(1, H + 1):
        c = _pochhammer(s, l) / math.factorial(l)
        total += c * zeta_em(s + l - kp.alpha)
        bound += abs(c) * ZETA_ABS_TOL
    total -= 0.5 * s * zeta_em(s + 1.0)
    saw = sawtooth_dirichlet(s + 1.0, kp, N)
    total -= s * saw.value
    rem, rem_bound = _remainder_terms(s, kp, N)
    total += s * rem
    bound += 0.5 * s * ZETA_ABS_TOL + s * saw.error_bound + s * rem_bound
    return ZetaValue(total, bound, "continuation")


def _direct_zeta(s: float, kp: KappaParam, V: int) -> ZetaValue:
    if s <= kp.alpha or s <= 1.0:
        raise DomainError("direct summation needs s > max(alpha, 1)")
    values, weights = part_groups(V, kp)
    head = math.fsum(weights * values.astype(float) ** (-s))
    # w_v = (v+1)^a - v^a + (delta_v - delta_{v+1}) with delta in [0,1)
    coeffs, exps = [], []
    a = kp.alpha
    binom = 1.0
    for j in range(1, 30):
        binom *= (a - j + 1) / j
        coeffs.append(binom)
        exps.append(s - a + j)
        if abs(binom) < 1e-30:
            break
    tail, tb = _series_tail(coeffs, exps, V)
    bound = tb + 2.0 * (V + 1.0) ** (-s)
    return ZetaValue(head + tail, bound, "direct")


def ps_zeta(s: float, kappa, method: str = "auto", N: int | None = None) -> ZetaValue:
    """Evaluate zeta_kappa(s) at real s.

    Integer alpha: exact binomial combination of zeta values, any s off the
    poles. Otherwise the continuation (s > 0) or, with ``method="direct"``,
    truncated direct summation (s > max(alpha, 1)).
    """
    kp = as_kappa(kappa)
    s = float(s)
    _check_pole(s, kp)
    if method == "direct":
        return _direct_zeta(s, kp, N or (100_000 if kp.kappa < 1 else 1_000_000))
    if kp.alpha_is_integer:
        return _integer_alpha_zeta(s, kp)
    if s <= 0.0:
        raise DomainError("continuation for non-integer alpha is implemented for s > 0; "
                          "use ps_zeta_zero / ps_zeta_deriv_zero at s = 0")
    return _continued_zeta(s, kp, N or 100_000)


@lru_cache(maxsize=16)
def _deriv_zero_cached(kp: KappaParam, N: int, tail: str) -> ZetaValue:
    if kp.alpha_is_integer:
        a = int(kp.alpha_exact)
        value = math.fsum(math.comb(a, h) * zeta_deriv(-h) for h in range(a))
        bound = ZETA_DERIV_ABS_TOL * sum(math.comb(a, h) for h in range(a))
        return ZetaValue(value, bound, "integer-alpha-formula")

    H = kp.ceil_alpha
    alpha = kp.alpha
    value = math.fsum((zeta_em(h - alpha) - 1.0) / h for h in range(1, H + 1))
    bound = ZETA_ABS_TOL * H

    powers, frac, _ = alpha_power_table(N, kp)
    n = np.arange(2, N + 1, dtype=float)
    x = powers[1:]
    # -n^alpha log E_H(1/n) = sum_{j>H} n^(alpha-j)/j ; tail is a power series
    value += math.fsum(-x * log_canonical_factor(H, 1.0 / n))
    J = 40
    tv, tb = _series_tail([1.0 / j for j in range(H + 1, H + 1 + J)],
                          [j - alpha for j in range(H + 1, H + 1 + J)], N)
    value += tv
    bound += tb + power_tail(H + J + 1 - alpha, N)[0]

    ind_value, ind_bound = _perfect_power_log_sum(kp.d_alpha)
    value += ind_value
    bound += ind_bound

    osc, osc_bound = sawtooth_log_sum(kp, N, tail)
    return ZetaValue(value - osc, bound + osc_bound, "continuation")


@lru_cache(maxsize=None)
def _perfect_power_log_sum(d: int | None, K: int = 100_000) -> tuple[float, float]:
    """sum_{k>=2} log(1 - k^(-d)) with an Euler-Maclaurin tail."""
    if d is None:
        return 0.0, 0.0
    k = np.arange(2, K + 1, dtype=float)
    value = math.fsum(np.log1p(-k ** (-d)))
    J = max(4, int(40 / d) + 2)
    tv, tb = _series_tail([-1.0 / j for j in range(1, J + 1)], [d * j for j in range(1, J + 1)], K)
    return value + tv, tb + power_tail(d * (J + 1), K)[0]


def ps_zeta_deriv_zero(kappa, N: int = 1_000_000, tail: str = "auto") -> ZetaValue:
    """zeta_kappa'(0) with an error bound.

    Integer alpha: sum_h C(alpha, h) zeta'(-h). Otherwise the canonical
    factor series truncated at n <= N (N >= 1000). The oscillating part's
    tail is handled by ``sawtooth_log_sum``; with ``tail="abel"`` the bound
    can exceed the actual error by orders of magnitude.
    """
    kp = as_kappa(kappa)
    if not kp.alpha_is_integer and N < 1000:
        raise ValueError("N must be >= 1000 for non-integer alpha")
    return _deriv_zero_cached(kp, int(N), tail)


class IdentityGap(NamedTuple):
    gap: float
    bound: float
    lhs: float
    rhs: float


def remark_identity_gap(k: int, N: int = 1_000_000, tail: str = "auto") -> IdentityGap:
    """Check -(k/2) log(2 pi) + 1 = zeta(1 - 1/k) + sum_{n>=2} log(E_0(n^-k)
    E_0(1/n)^(B1({n^(1/k)})) / E_1(1/n)^(n^(1/k))) with the sum cut at N.

    Success means gap <= bound.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if N < 1000:
        raise ValueError("N must be >= 1000")
    kp = KappaParam(Fraction(k))
    alpha = 1.0 / k
    lhs = -0.5 * k * math.log(2.0 * math.pi) + 1.0

    rhs = zeta_em(1.0 - alpha)
    bound = ZETA_ABS_TOL
    n = np.arange(2, N + 1, dtype=float)
    # log E_0(n^-k): absolutely convergent
    rhs += math.fsum(np.log1p(-n ** (-float(k))))
    J = max(4, int(40 / k) + 2)
    tv, tb = _series_tail([-1.0 / j for j in range(1, J + 1)], [k * j for j in range(1, J + 1)], N)
    rhs += tv
    bound += tb + power_tail(k * (J + 1), N)[0]
    # -n^(1/k) log E_1(1/n)
    powers, frac, _ = alpha_power_table(N, kp)
    rhs -= math.fsum(powers[1:] * log_canonical_factor(1, 1.0 / n))
    tv, tb = _series_tail([1.0 / j for j in range(2, 42)], [j - alpha for j in range(2, 42)], N)
    rhs += tv
    bound += tb + power_tail(42 - alpha, N)[0]
    # sawtooth-weighted log E_0(1/n)
    osc, osc_bound = sawtooth_log_sum(kp, N, tail)
    return IdentityGap(abs(lhs - rhs + osc), bound + osc_bound, lhs, rhs - osc)
