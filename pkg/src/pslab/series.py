"""Truncated real power series.

A ``PowerSeries`` of order J stores the coefficients of t^0 .. t^J. Every
operation truncates at the common order, so products never grow.
"""
from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from ._errors import DomainError


class PowerSeries:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[float], order: int | None = None):
        c = np.asarray(list(coefficients) if not isinstance(coefficients, np.ndarray)
                       else coefficients, dtype=float).ravel()
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            padded = np.zeros(order + 1)
            k = min(order + 1, len(c))
            padded[:k] = c[:k]
            c = padded
        if len(c) == 0:
            raise ValueError("a power series needs at least one coefficient")
        self.coefficients = c

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def constant(cls, value: float, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> "PowerSeries":
        return cls([0.0, 1.0], order)

    def __repr__(self) -> str:
        return f"PowerSeries({self.coefficients.tolist()})"

    def __getitem__(self, j: int) -> float:
        return float(self.coefficients[j]) if 0 <= j <= self.order else 0.0

    def __len__(self) -> int:
        return len(self.coefficients)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        return PowerSeries.constant(float(other), self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return PowerSeries(self.coefficients + other.coefficients)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self.coefficients)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(self.coefficients * float(other))
        other = self._coerce(other)
        return PowerSeries(np.convolve(self.coefficients, other.coefficients)[: self.order + 1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(self.coefficients / float(other))
        return self * self._coerce(other).reciprocal()

    def __pow__(self, r):
        return self.power(r)

    def allclose(self, other, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.coefficients, self._coerce(other).coefficients,
                                rtol=0.0, atol=atol))

    def derivative(self) -> "PowerSeries":
        """Term-wise derivative, padded with a zero to keep the order."""
        d = self.coefficients[1:] * np.arange(1, self.order + 1)
        return PowerSeries(d, self.order)

    def integral(self, constant: float = 0.0) -> "PowerSeries":
        c = np.empty(self.order + 1)
        c[0] = constant
        c[1:] = self.coefficients[:-1] / np.arange(1, self.order + 1)
        return PowerSeries(c)

    def reciprocal(self) -> "PowerSeries":
        s = self.coefficients
        if s[0] == 0.0:
            raise DomainError("reciprocal needs a non-zero constant term")
        r = np.zeros_like(s)
        r[0] = 1.0 / s[0]
        for k in range(1, len(s)):
            r[k] = -np.dot(s[1:k + 1], r[k - 1::-1][:k]) / s[0]
        return PowerSeries(r)

    def exp(self) -> "PowerSeries":
        s = self.coefficients
        e = np.zeros_like(s)
        e[0] = math.exp(s[0])
        js = np.arange(1, len(s))
        for k in range(1, len(s)):
            e[k] = np.dot(js[:k] * s[1:k + 1], e[k - 1::-1][:k]) / k
        return PowerSeries(e)

    def log(self) -> "PowerSeries":
        s0 = self.coefficients[0]
        if s0 <= 0.0:
            raise DomainError("log needs a positive constant term")
        return (self.derivative() * self.reciprocal()).integral(math.log(s0))

    def power(self, r: float) -> "PowerSeries":
        """S^r for S(0) > 0 (or any S when r is a non-negative integer)."""
        s = self.coefficients
        if float(r).is_integer() and r >= 0:
            out = PowerSeries.constant(1.0, self.order)
            base, k = self, int(r)
            while k:
                if k & 1:
                    out = out * base
                base = base * base
                k >>= 1
            return out
        if s[0] <= 0.0:
            raise DomainError("real power needs a positive constant term")
        # J.C.P. Miller recurrence: k s0 t_k = sum_j ((r+1) j - k) s_j t_{k-j}
        t = np.zeros_like(s)
        t[0] = s[0] ** r
        for k in range(1, len(s)):
            j = np.arange(1, k + 1)
            t[k] = np.dot(((r + 1.0) * j - k) * s[1:k + 1], t[k - j]) / (k * s[0])
        return PowerSeries(t)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(t)); inner must have zero constant term."""
        inner = self._coerce(inner)
        if inner.coefficients[0] != 0.0:
            raise DomainError("inner series must vanish at 0")
        out = PowerSeries.constant(self.coefficients[-1], self.order)
        for c in self.coefficients[-2::-1]:
            out = out * inner + c
        return out

    def __call__(self, t: float) -> float:
        return float(np.polynomial.polynomial.polyval(t, self.coefficients))


def log1p_series(order: int) -> PowerSeries:
    """log(1 + t) = sum (-1)^(j+1) t^j / j."""
    j = np.arange(1, order + 1)
    return PowerSeries(np.concatenate([[0.0], (-1.0) ** (j + 1) / j]))
