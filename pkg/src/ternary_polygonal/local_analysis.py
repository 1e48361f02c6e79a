"""Congruence-level local checks for sums of three m-gonal numbers.

Everything here is a finite residue enumeration; no p-adic arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .polygonal import _family

__all__ = [
    "ObstructionReport",
    "polygonal_period",
    "polygonal_residues",
    "sum_residues",
    "obstruction_report",
    "mod8_obstruction",
    "two_adic_surjective",
    "local_precision",
    "locally_admissible",
]


@dataclass(frozen=True)
class ObstructionReport:
    m: int
    modulus: int
    missing_residues: frozenset

    def to_dict(self) -> dict:
        return {"m": self.m, "modulus": self.modulus,
                "missing_residues": sorted(self.missing_residues)}


def _residue_sequence(m: int, modulus: int, length: int) -> np.ndarray:
    # p_m(x) mod M = (((m-2)x^2 - (m-4)x) mod 2M) / 2, kept inside int64
    two_m = 2 * modulus
    x = np.arange(length, dtype=np.int64) % two_m
    q = (x * x) % two_m
    v = ((m - 2) % two_m * q - (m - 4) % two_m * x) % two_m
    return v // 2


def polygonal_period(m: int, modulus: int) -> int:
    """Least L > 0 with p_m(x + L) = p_m(x) mod modulus for all x (L divides 2*modulus)."""
    m = _family(m).m
    seq = _residue_sequence(m, modulus, 4 * modulus)
    n = 2 * modulus
    for L in sorted(d for d in range(1, n + 1) if n % d == 0):
        if np.array_equal(seq[L:L + n], seq[:n]):
            return L
    raise AssertionError("period must divide 2*modulus")


@lru_cache(maxsize=256)
def _residue_mask(m: int, modulus: int) -> np.ndarray:
    mask = np.zeros(modulus, dtype=bool)
    mask[_residue_sequence(m, modulus, 2 * modulus)] = True
    mask.setflags(write=False)
    return mask


def polygonal_residues(m: int, modulus: int) -> set[int]:
    """{p_m(x) mod modulus}; a run of 2*modulus consecutive x covers a full period."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    m = _family(m).m
    return {int(r) for r in np.flatnonzero(_residue_mask(m, modulus))}


def _cyclic_sumset(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = len(a)
    if a.all() or b.all():
        return np.ones(n, dtype=bool) if (a.any() and b.any()) else np.zeros(n, dtype=bool)
    if n <= 4096:
        out = np.zeros(n, dtype=bool)
        for r in np.flatnonzero(a):
            out |= np.roll(b, r)
        return out
    conv = np.fft.irfft(np.fft.rfft(a.astype(float)) * np.fft.rfft(b.astype(float)), n)
    # counts are integers; anything at least 1/2 is a genuine hit
    return conv > 0.5


@lru_cache(maxsize=256)
def _sum_mask(m: int, modulus: int) -> np.ndarray:
    one = _residue_mask(m, modulus)
    out = _cyclic_sumset(_cyclic_sumset(one, one), one)
    out.setflags(write=False)
    return out


def sum_residues(m: int, modulus: int) -> set[int]:
    """Residues mod modulus attained by p_m(x) + p_m(y) + p_m(z)."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    m = _family(m).m
    return {int(r) for r in np.flatnonzero(_sum_mask(m, modulus))}


def obstruction_report(m: int, modulus: int = 8) -> ObstructionReport:
    attained = sum_residues(m, modulus)
    return ObstructionReport(m, modulus, frozenset(set(range(modulus)) - attained))


def mod8_obstruction(m: int) -> int | None:
    """Residue class mod 8 that P_m misses entirely, if 4 | m."""
    m = _family(m).m
    if m % 8 == 0:
        return 4
    if m % 8 == 4:
        return 7
    return None


def two_adic_surjective(m: int, k: int) -> bool:
    """Whether a single p_m hits every residue modulo 2^k."""
    m = _family(m).m
    if m % 4 == 0:
        raise ValueError(f"m={m} is divisible by 4")
    if not 1 <= k <= 24:
        raise ValueError(f"k must lie in [1, 24], got {k}")
    return bool(_residue_mask(m, 2 ** k).all())


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _ord(p: int, n: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def local_precision(m: int) -> dict[int, int]:
    """Prime -> exponent k_p = ord_p(8(m-2)^3) + 1 for each p dividing 6(m-2)."""
    m = _family(m).m
    c = 8 * (m - 2) ** 3
    return {p: _ord(p, c) + 1 for p in _prime_factors(6 * (m - 2))}


def locally_admissible(m: int, n: int) -> bool:
    """Whether P_m = n is solvable modulo p^k_p for every prime p | 6(m-2)."""
    m = _family(m).m
    for p, k in local_precision(m).items():
        q = p ** k
        if not _sum_mask(m, q)[n % q]:
            return False
    return True
