import itertools
from math import isqrt

import pytest


def brute_polygonal_count(m, n):
    """Triple loop over a generous box; no shortcuts shared with the library."""
    p = lambda x: ((m - 2) * x * x - (m - 4) * x) // 2
    lim = 2 + 2 * isqrt(2 * n // (m - 2) + 1)
    vals = [p(x) for x in range(-lim, lim + 1)]
    return sum(1 for a, b, c in itertools.product(vals, repeat=3) if a + b + c == n)


def brute_coset_count(modulus, residues, ell):
    lim = isqrt(ell)
    axes = [[v for v in range(-lim, lim + 1) if (v - r) % modulus == 0] for r in residues]
    return sum(1 for x, y, z in itertools.product(*axes) if x * x + y * y + z * z == ell)


@pytest.fixture
def brute_polygonal():
    return brute_polygonal_count


@pytest.fixture
def brute_coset():
    return brute_coset_count


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
