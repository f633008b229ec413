"""Exact arithmetic on the Piatetski-Shapiro sequence floor(l**kappa).

``KappaParam`` carries kappa as an exact fraction so that every branch on
"alpha is an integer" or on the reduced denominator of alpha is decided
exactly. Floors and ceilings of rational powers are computed with integer
roots, never with a floating ``floor``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from ._errors import BoundaryError

_BOUNDARY_EPS = 1e-12


def iroot(x: int, k: int) -> int:
    """Floor of the k-th root of a non-negative integer."""
    if x < 0:
        raise ValueError("iroot needs x >= 0")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return math.isqrt(x)
    bits = x.bit_length()
    if bits <= 900:
        r = int(round(x ** (1.0 / k)))
    else:
        r = 1 << ((bits + k - 1) // k)
    # Newton from above, then fix the last step exactly
    if r ** k < x:
        r += 1
        while r ** k <= x:
            r *= 2
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def _floor_rational_power(n: int, frac: Fraction) -> int:
    """floor(n ** (p/q)) for n >= 0 and p/q > 0."""
    return iroot(n ** frac.numerator, frac.denominator)


def _ceil_rational_power(n: int, frac: Fraction) -> int:
    x = n ** frac.numerator
    r = iroot(x, frac.denominator)
    return r if r ** frac.denominator == x else r + 1


@dataclass(frozen=True)
class KappaParam:
    """The exponent kappa with derived quantities of alpha = 1/kappa.

    ``irrational=True`` marks a decimal kappa standing in for an irrational
    value: floors are then evaluated in floating point with a boundary
    guard, and ``d_alpha`` is ``None`` (the infinity marker). A float that
    lands next to an integer is re-evaluated exactly from the decimal when
    that is cheap, otherwise ``BoundaryError`` is raised.
    """

    kappa: Fraction
    irrational: bool = False
    alpha: float = field(init=False)
    alpha_exact: Fraction = field(init=False)
    ceil_alpha: int = field(init=False)
    frac_alpha: float = field(init=False)
    d_alpha: int | None = field(init=False)

    def __post_init__(self):
        kappa = Fraction(self.kappa)
        if kappa <= 0:
            raise ValueError("kappa must be positive")
        object.__setattr__(self, "kappa", kappa)
        alpha_exact = 1 / kappa
        object.__setattr__(self, "alpha_exact", alpha_exact)
        object.__setattr__(self, "alpha", float(alpha_exact))
        object.__setattr__(self, "ceil_alpha", math.ceil(alpha_exact))
        object.__setattr__(self, "frac_alpha", float(alpha_exact - math.floor(alpha_exact)))
        d = None if self.irrational else alpha_exact.denominator
        object.__setattr__(self, "d_alpha", d)

    @classmethod
    def parse(cls, text, irrational: bool = False) -> "KappaParam":
        """Build from ``"p/q"``, an integer, a decimal string or a Fraction."""
        if isinstance(text, KappaParam):
            return text
        if isinstance(text, float):
            return cls(Fraction(repr(text)), irrational=irrational)
        return cls(Fraction(str(text).strip()) if isinstance(text, str) else Fraction(text),
                   irrational=irrational)

    @property
    def kappa_float(self) -> float:
        return float(self.kappa)

    @property
    def alpha_is_integer(self) -> bool:
        return not self.irrational and self.alpha_exact.denominator == 1

    @property
    def kappa_is_integer(self) -> bool:
        return not self.irrational and self.kappa.denominator == 1

    def __str__(self) -> str:
        return str(self.kappa)


def as_kappa(kappa) -> KappaParam:
    return kappa if isinstance(kappa, KappaParam) else KappaParam.parse(kappa)


def _guarded_floor(x: float) -> int:
    r = round(x)
    if abs(x - r) < _BOUNDARY_EPS:
        raise BoundaryError(f"{x!r} is within {_BOUNDARY_EPS} of an integer")
    return math.floor(x)


_EXACT_FALLBACK_BITS = 200_000


def _exact_affordable(base: int, exponent: Fraction) -> bool:
    return exponent.numerator * base.bit_length() <= _EXACT_FALLBACK_BITS


def _irrational_floor(base: int, exponent: Fraction, x: float) -> int:
    # a decimal kappa is still an exact rational; use it when a float floor is ambiguous
    try:
        return _guarded_floor(x)
    except BoundaryError:
        if _exact_affordable(base, exponent):
            return _floor_rational_power(base, exponent)
        raise


def ps_term(ell: int, kappa) -> int:
    """floor(ell ** kappa) for ell >= 1."""
    kp = as_kappa(kappa)
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if kp.irrational:
        if ell == 1:
            return 1
        return _irrational_floor(ell, kp.kappa, ell ** kp.kappa_float)
    return _floor_rational_power(ell, kp.kappa)


def _ceil_alpha_power(n: int, kp: KappaParam) -> int:
    """ceil(n ** alpha), exact in rational mode."""
    if kp.irrational:
        if n == 1:
            return 1
        x = n ** kp.alpha
        r = round(x)
        if abs(x - r) < _BOUNDARY_EPS:
            if _exact_affordable(n, kp.alpha_exact):
                return _ceil_rational_power(n, kp.alpha_exact)
            raise BoundaryError(f"{x!r} is within {_BOUNDARY_EPS} of an integer")
        return math.ceil(x)
    return _ceil_rational_power(n, kp.alpha_exact)


def value_multiplicity(n: int, kappa) -> int:
    """Number of indices l with floor(l**kappa) == n."""
    kp = as_kappa(kappa)
    if n < 1:
        raise ValueError("n must be >= 1")
    return _ceil_alpha_power(n + 1, kp) - _ceil_alpha_power(n, kp)


def max_index(bound: int, kappa) -> int:
    """Largest l with floor(l**kappa) <= bound (0 if none)."""
    kp = as_kappa(kappa)
    if bound < 1:
        return 0
    return _ceil_alpha_power(bound + 1, kp) - 1


def is_alpha_power_integer(n: int, kappa) -> bool:
    """Exact test for n**alpha being an integer.

    For alpha = p/q in lowest terms this holds exactly when n is a perfect
    q-th power. Irrational mode never reports a hit beyond n = 1.
    """
    kp = as_kappa(kappa)
    if n == 1:
        return True
    if kp.irrational:
        return False
    q = kp.d_alpha
    return iroot(n, q) ** q == n


@lru_cache(maxsize=32)
def _part_groups(kp: KappaParam, bound: int) -> tuple[np.ndarray, np.ndarray]:
    if kp.kappa >= 1:
        top = max_index(bound, kp)
        vals = np.fromiter((ps_term(l, kp) for l in range(1, top + 1)),
                           dtype=np.int64, count=top)
        values, weights = np.unique(vals, return_counts=True)
        return values, weights.astype(np.int64)
    ceilings = np.fromiter((_ceil_alpha_power(v, kp) for v in range(1, bound + 2)),
                           dtype=np.int64, count=bound + 1)
    weights = np.diff(ceilings)
    values = np.arange(1, bound + 1, dtype=np.int64)
    keep = weights > 0
    return values[keep], weights[keep]


def part_groups(bound: int, kappa) -> tuple[np.ndarray, np.ndarray]:
    """Distinct part values v <= bound and their multiplicities w_v.

    Returned arrays are read-only and shared between callers.
    """
    kp = as_kappa(kappa)
    values, weights = _part_groups(kp, int(bound))
    values.setflags(write=False)
    weights.setflags(write=False)
    return values, weights


class WeylSumResult(NamedTuple):
    real_part: float
    imag_part: float
    count: int

    @property
    def modulus(self) -> float:
        return math.hypot(self.real_part, self.imag_part)


def _terms(lo: int, hi: int, kp: KappaParam) -> np.ndarray:
    return np.array([ps_term(l, kp) for l in range(lo, hi + 1)], dtype=object)


def _frac_products(y: float, terms) -> np.ndarray:
    # reduce y*v mod 1 with the exact integer split to keep phases accurate
    yf = Fraction(y)
    out = np.empty(len(terms))
    for i, v in enumerate(terms):
        prod = yf * v
        out[i] = float(prod - math.floor(prod))
    return out


def weyl_sum(H: int, y: float, kappa) -> WeylSumResult:
    """Exponential sum of exp(2 pi i y floor(l**kappa)) over H/2 <= l < H."""
    kp = as_kappa(kappa)
    if H < 4:
        raise ValueError("H must be >= 4")
    if abs(y) > 0.5:
        raise ValueError("|y| must be <= 1/2")
    lo = (H + 1) // 2
    terms = _terms(lo, H - 1, kp)
    phase = 2.0 * math.pi * _frac_products(y, terms)
    return WeylSumResult(float(np.cos(phase).sum()), float(np.sin(phase).sum()), len(terms))


def condition2_value(H: int, y: float, kappa, terms=None) -> float:
    """(1/log H) * sum_{l <= H} ||floor(l**kappa) y||^2 at a single y."""
    kp = as_kappa(kappa)
    if terms is None:
        terms = _terms(1, H, kp)
    frac = _frac_products(y, terms)
    dist = np.minimum(frac, 1.0 - frac)
    return float(np.dot(dist, dist) / math.log(H))


def condition2_statistic(H: int, kappa, grid_size: int = 256) -> float:
    """Minimum of ``condition2_value`` over a geometric y-grid.

    The grid spans [1/(2 floor(H**kappa)), 1/2]. This is a numerical probe of
    the infimum and gives no proof of divergence.
    """
    kp = as_kappa(kappa)
    if H < 16:
        raise ValueError("H must be >= 16")
    if grid_size < 64:
        raise ValueError("grid_size must be >= 64")
    terms = _terms(1, H, kp)
    lo = 1.0 / (2 * ps_term(H, kp))
    grid = np.geomspace(lo, 0.5, grid_size)
    # float phases are accurate here: y*v stays far below 2**53
    vals = np.array([float(v) for v in terms])
    frac = np.mod(np.outer(grid, vals), 1.0)
    dist = np.minimum(frac, 1.0 - frac)
    stats = np.einsum("ij,ij->i", dist, dist) / math.log(H)
    return float(stats.min())


def fractional_parts(limit: int, kappa) -> np.ndarray:
    """{l**kappa} for l = 1..limit, using exact floors."""
    kp = as_kappa(kappa)
    out = _power_table(kp.kappa, kp.irrational, int(limit))[1]
    out.setflags(write=False)
    return out


# above this a float power has absolute error > ~1e-10, so fractions are rebuilt exactly
_FLOAT_FRAC_LIMIT = 2.0 ** 20
# irrational mode has no exact route; refuse once float error could reach 1e-7
_IRRATIONAL_FRAC_LIMIT = 1e-7 * 2.0 ** 52


def _exact_fractions(k: np.ndarray, y: np.ndarray, exponent: Fraction):
    """({k^(p/q)}, [k^(p/q) is an integer]) from the integer residual k^p - F^q.

    With F the floor, y^q - F^q = (y - F) sum_i y^(q-1-i) F^i, so the
    fraction keeps full relative precision however large y is.
    """
    p, q = exponent.numerator, exponent.denominator
    fits = (p * math.log2(float(k[-1])) < 62 and q * math.log2(float(y.max()) + 2.0) < 62)
    if fits:
        kk = k.astype(np.int64)
        F = np.floor(y).astype(np.int64)
    else:
        kk = np.array([int(v) for v in k], dtype=object)
        F = np.array([int(v) for v in np.floor(y)], dtype=object)
    target = kk ** p
    # integer Newton steps: the float candidate can be far off when y > 2**53
    for _ in range(64):
        D = target - F ** q
        bad = (D < 0) | (D >= (F + 1) ** q - F ** q)
        if not bad.any():
            break
        step = D // (q * F ** (q - 1))
        step = np.where(step == 0, np.where(D < 0, -1, 1), step)
        F = np.where(bad, F + step, F)
    else:
        raise BoundaryError("floor correction did not settle")
    Ff = F.astype(float)
    S = np.zeros_like(y)
    for i in range(q):
        S += y ** (q - 1 - i) * Ff ** i
    is_int = np.asarray(D == 0, dtype=bool)
    frac = np.where(is_int, 0.0, D.astype(float) / S)
    return frac, is_int


@lru_cache(maxsize=8)
def _power_table(exponent: Fraction, irrational: bool, limit: int):
    """(n**e, {n**e}, [n**e is an integer]) for n = 1..limit."""
    n = np.arange(1, limit + 1, dtype=float)
    powers = n ** float(exponent)
    is_int = np.zeros(limit, dtype=bool)
    if not irrational and exponent.denominator == 1:
        is_int[:] = True
        return powers, np.zeros(limit), is_int
    if irrational and powers[-1] > _IRRATIONAL_FRAC_LIMIT:
        raise BoundaryError(f"fractional parts of n**{float(exponent)} are not reliable in "
                            f"floating point beyond n^e = {_IRRATIONAL_FRAC_LIMIT:.3g}")
    small = int(np.searchsorted(powers, _FLOAT_FRAC_LIMIT, side="left"))
    floors = np.floor(powers[:small])
    near = np.nonzero(np.abs(powers[:small] - np.round(powers[:small])) < 1e-6)[0]
    for i in near:
        k = int(i) + 1
        if irrational:
            if k == 1:
                floors[i], is_int[i] = 1.0, True
            else:
                floors[i] = float(_irrational_floor(k, exponent, powers[i]))
            continue
        exact = _floor_rational_power(k, exponent)
        floors[i] = float(exact)
        is_int[i] = exact ** exponent.denominator == k ** exponent.numerator
    frac = np.empty(limit)
    frac[:small] = np.where(is_int[:small], 0.0, powers[:small] - floors)
    if small < limit:
        if irrational:
            frac[small:] = powers[small:] - np.floor(powers[small:])
        else:
            frac[small:], is_int[small:] = _exact_fractions(n[small:], powers[small:], exponent)
    return powers, frac, is_int


def _alpha_power_table(kp: KappaParam, limit: int):
    return _power_table(kp.alpha_exact, kp.irrational, limit)


def alpha_power_table(limit: int, kappa) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(n**alpha, {n**alpha}, [n**alpha is an integer]) for n = 1..limit.

    Floors next to an integer are settled with exact integer roots.
    """
    kp = as_kappa(kappa)
    out = _alpha_power_table(kp, int(limit))
    for arr in out:
        arr.setflags(write=False)
    return out
