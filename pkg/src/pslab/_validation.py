"""Input validation shared by the estimators and the CLI."""
from __future__ import annotations

import re

import numpy as np
from sklearn.utils import check_array

from .exact import parse_m
from .sequence import KappaParam

_RATIONAL = re.compile(r"^\s*[+]?\d+(\s*/\s*\d+)?\s*$")


def is_exact_rational_text(text: str) -> bool:
    """True for "p" or "p/q"; decimals and exponents are rejected."""
    return bool(_RATIONAL.match(text))


def check_kappa(kappa, allow_decimal: bool = False) -> KappaParam:
    """Parse kappa; decimal strings are only accepted with ``allow_decimal``.

    A decimal is treated as an irrational exponent (no exact floors).
    """
    if isinstance(kappa, KappaParam):
        return kappa
    if isinstance(kappa, str) and not is_exact_rational_text(kappa):
        if not allow_decimal:
            raise ValueError(f"kappa must be an exact rational 'p/q', got {kappa!r}")
        return KappaParam.parse(kappa, irrational=True)
    if isinstance(kappa, float):
        if not allow_decimal:
            raise ValueError("kappa must be an exact rational; pass a Fraction or 'p/q'")
        return KappaParam.parse(kappa, irrational=True)
    try:
        return KappaParam.parse(kappa)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse kappa {kappa!r}: {exc}") from None


def check_m(m):
    return parse_m(m)


def check_n_values(X) -> np.ndarray:
    """Positive integer n-values from a scalar, 1-D or single-column input."""
    arr = np.asarray(X)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    arr = check_array(arr, ensure_2d=False, dtype=np.float64)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected a single column of n-values, got shape {arr.shape}")
        arr = arr[:, 0]
    if np.any(arr < 1) or np.any(arr != np.floor(arr)):
        raise ValueError("n-values must be positive integers")
    return arr.astype(np.int64)
