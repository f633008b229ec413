"""Exact partition counts into Piatetski-Shapiro parts.

Two exact constructions of the coefficients of
    prod_v ((1 - x^((m+1) v)) / (1 - x^v)) ** w_v
are provided. ``method="groups"`` multiplies in one value-group factor at a
time (bounded or unbounded knapsack updates for small groups, binomial
series for large ones). ``method="euler"`` uses the logarithmic-derivative
recurrence n c(n) = sum_k a(k) c(n-k), which is far cheaper when many
indices share a value (kappa < 1).
"""

from __future__ import annotations

import csv
import io
import json
import math
import operator
from dataclasses import dataclass

from ._errors import BudgetError
from .sequence import KappaParam, as_kappa, max_index, part_groups

INF = math.inf
DEFAULT_PART_BUDGET = 10 ** 10


def parse_m(m) -> int | float:
    """Normalise a multiplicity cap to a positive int or ``math.inf``."""
    if m is None:
        return INF
    if isinstance(m, str):
        text = m.strip().lower()
        if text in ("inf", "infinity", "oo", "∞"):
            return INF
        m = int(text)
    if isinstance(m, float):
        if math.isinf(m) and m > 0:
            return INF
        if not m.is_integer():
            raise ValueError(f"multiplicity cap must be an integer or inf, got {m}")
        m = int(m)
    if m < 1:
        raise ValueError(f"multiplicity cap must be >= 1, got {m}")
    return int(m)


def m_label(m) -> str:
    return "inf" if m == INF else str(m)


@dataclass(frozen=True)
class CountTable:
    kappa: KappaParam
    m: int | float
    N: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    def to_csv(self, fh=None) -> str | None:
        """Write ``n,count`` rows (counts as decimal strings)."""
        buf = io.StringIO() if fh is None else fh
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "count"])
        for n, c in enumerate(self.counts):
            writer.writerow([n, str(c)])
        return buf.getvalue() if fh is None else None

    def to_json(self) -> str:
        return json.dumps({
            "kappa": str(self.kappa.kappa),
            "m": m_label(self.m),
            "N": self.N,
            "counts": [str(c) for c in self.counts],
        })

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        data = json.loads(text)
        return cls(as_kappa(data["kappa"]), parse_m(data["m"]), int(data["N"]),
                   tuple(int(c) for c in data["counts"]))


def _check_budget(kp: KappaParam, N: int, budget: int) -> None:
    # index count ceil((N+1)^alpha) - 1, computed without building anything
    needed = max_index(N, kp) + 1
    if needed > budget:
        raise BudgetError(
            f"kappa={kp} with N={N} needs {needed} part indices (budget {budget})")


def _apply_unbounded(a: list[int], v: int, w: int, N: int) -> None:
    """Multiply a in place by (1 - x^v)^(-w), truncated at degree N."""
    if v > N:
        return
    span = N - v + 1
    # repeated knapsack passes cost w*span; the binomial series ~ span*N/(2v)
    if w * span <= span * (N // v + 1) // 2 + span:
        for _ in range(w):
            for i in range(v, N + 1):
                a[i] += a[i - v]
        return
    K = N // v
    coef = [1] * (K + 1)
    for k in range(1, K + 1):
        coef[k] = coef[k - 1] * (w + k - 1) // k
    for r in range(v):
        seq = a[r::v]
        out = [sum(map(operator.mul, coef[: i + 1], reversed(seq[: i + 1])))
               for i in range(len(seq))]
        a[r::v] = out


def _apply_bounded(a: list[int], v: int, w: int, m: int, N: int) -> None:
    """Multiply a in place by ((1 - x^((m+1)v)) / (1 - x^v))^w."""
    if v > N:
        return
    top = (m + 1) * v
    span = N - v + 1
    if w * 2 * span <= span * (N // v + 1) // 2 + span:
        for _ in range(w):
            # multiply by 1/(1-x^v), then by (1 - x^top): inclusion-exclusion
            for i in range(v, N + 1):
                a[i] += a[i - v]
            for i in range(N, top - 1, -1):
                a[i] -= a[i - top]
        return
    _apply_unbounded(a, v, w, N)
    if top > N:
        return
    K = N // top
    coef = [(-1) ** k * math.comb(w, k) for k in range(K + 1)]
    for r in range(top):
        seq = a[r::top]
        out = [sum(map(operator.mul, coef[: i + 1], reversed(seq[: i + 1])))
               for i in range(len(seq))]
        a[r::top] = out


def _groups_table(values, weights, m, N: int, order=None) -> list[int]:
    a = [0] * (N + 1)
    a[0] = 1
    idx = range(len(values)) if order is None else order
    for i in idx:
        v, w = int(values[i]), int(weights[i])
        if m == INF:
            _apply_unbounded(a, v, w, N)
        else:
            _apply_bounded(a, v, w, m, N)
    return a


def _euler_table(values, weights, m, N: int) -> list[int]:
    # a(k) = sum_{v | k} v w_v  -  sum_{(m+1) v | k} (m+1) v w_v
    a = [0] * (N + 1)
    for v, w in zip(values, weights):
        v, w = int(v), int(w)
        for k in range(v, N + 1, v):
            a[k] += v * w
        if m != INF:
            top = (m + 1) * v
            for k in range(top, N + 1, top):
                a[k] -= top * w
    c = [0] * (N + 1)
    c[0] = 1
    for n in range(1, N + 1):
        total = sum(map(operator.mul, a[1 : n + 1], reversed(c[:n])))
        q, r = divmod(total, n)
        if r:
            raise ArithmeticError(f"non-integral coefficient at n={n}")
        c[n] = q
    return c


def count_table(kappa, m, N: int, method: str = "auto",
                budget: int = DEFAULT_PART_BUDGET, order=None) -> CountTable:
    """Exact p_{kappa,m}(n) for n = 0..N.

    ``order`` permutes the value groups in the "groups" method; the result
    does not depend on it.
    """
    kp = as_kappa(kappa)
    m = parse_m(m)
    if N < 0:
        raise ValueError("N must be >= 0")
    _check_budget(kp, N, budget)
    if N == 0:
        return CountTable(kp, m, 0, (1,))
    values, weights = part_groups(N, kp)
    if method == "auto":
        # euler is O(N^2); groups is cheaper only when groups are tiny
        method = "groups" if int(weights.sum()) * N <= 4 * N * N else "euler"
    if method == "groups":
        counts = _groups_table(values, weights, m, N, order)
    elif method == "euler":
        counts = _euler_table(values, weights, m, N)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CountTable(kp, m, N, tuple(counts))


def _pentagonal_offsets(N: int):
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > N:
            return
        yield k, g1, g1 + k
        k += 1


def pentagonal_oracle(N: int, distinct: bool = False) -> list[int]:
    """p(n) (or q(n) when ``distinct``) for n = 0..N by Euler's pentagonal
    number theorem."""
    if N < 0:
        raise ValueError("N must be >= 0")
    p = [0] * (N + 1)
    p[0] = 1
    offsets = list(_pentagonal_offsets(N))
    for n in range(1, N + 1):
        total = 0
        for k, g1, g2 in offsets:
            if g1 > n:
                break
            term = p[n - g1] + (p[n - g2] if g2 <= n else 0)
            total += term if k % 2 else -term
        p[n] = total
    if not distinct:
        return p
    # q(x) = p(x) * prod(1 - x^(2n)); expand the product by pentagonal numbers
    euler = [0] * (N + 1)
    euler[0] = 1
    for k, g1, g2 in offsets:
        sign = -1 if k % 2 else 1
        if 2 * g1 <= N:
            euler[2 * g1] += sign
        if 2 * g2 <= N:
            euler[2 * g2] += sign
    sparse = [(j, e) for j, e in enumerate(euler) if e]
    return [sum(e * p[n - j] for j, e in sparse if j <= n) for n in range(N + 1)]
