import sys
from fractions import Fraction

import pytest

from pslab.sequence import ps_term


def brute_force_counts(kappa, m, N):
    """Count multisets of sequence indices l (each used at most m times) with
    sum floor(l^kappa) = n, by direct recursion over indices."""
    kappa = Fraction(kappa)
    parts = []
    l = 1
    while True:
        v = ps_term(l, kappa)
        if v > N:
            break
        parts.append(v)
        l += 1
    cap = N if m == "inf" else m
    counts = [0] * (N + 1)

    def rec(i, remaining):
        # parts are non-decreasing: once one is too big, so are the rest
        if i == len(parts) or parts[i] > remaining:
            counts[N - remaining] += 1
            return
        v = parts[i]
        for r in range(0, min(cap, remaining // v) + 1):
            rec(i + 1, remaining - r * v)

    rec(0, N)
    return counts


@pytest.fixture(scope="session")
def brute():
    return brute_force_counts


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
