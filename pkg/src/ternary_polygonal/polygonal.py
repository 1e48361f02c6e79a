"""Generalized m-gonal numbers and sums of three of them.

p_m(x) = ((m-2)x^2 - (m-4)x) / 2 for every integer x, negatives included.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt

import numpy as np

__all__ = [
    "PolygonalFamily",
    "ExceptionRecord",
    "polygonal_number",
    "ell_of",
    "coordinate_range",
    "polygonal_values",
    "representation_count",
    "represented_mask",
    "exceptional_set",
    "classify_exception",
    "is_square_class_3",
]


@dataclass(frozen=True)
class PolygonalFamily:
    m: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 3:
            raise ValueError(f"polygon order must be an integer >= 3, got {self.m}")

    @property
    def even(self) -> bool:
        return self.m % 2 == 0


def _family(family) -> PolygonalFamily:
    return family if isinstance(family, PolygonalFamily) else PolygonalFamily(int(family))


@dataclass(frozen=True)
class ExceptionRecord:
    m: int
    n: int
    ell: int
    square_class_3: bool

    def to_dict(self) -> dict:
        return {"n": self.n, "ell": self.ell, "square_class_3": self.square_class_3}


def polygonal_number(family, x: int) -> int:
    m = _family(family).m
    return ((m - 2) * x * x - (m - 4) * x) // 2


def ell_of(family, n: int) -> int:
    """The integer that P_m(x, y, z) = n turns into after completing the square."""
    m = _family(family).m
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if m % 2 == 0:
        return 2 * (m - 2) * n + 3 * ((m - 4) // 2) ** 2
    return 8 * (m - 2) * n + 3 * (m - 4) ** 2


def is_square_class_3(ell: int) -> bool:
    if ell % 3:
        return False
    r = isqrt(ell // 3)
    return r * r * 3 == ell


def coordinate_range(family, n: int) -> range:
    """All integers x with p_m(x) <= n, found with integer square roots only.

    p_m(x) <= n  <=>  (m-2)x^2 - (m-4)x - 2n <= 0, whose roots are
    ((m-4) -/+ sqrt(D)) / (2(m-2)) with D = (m-4)^2 + 8(m-2)n.
    """
    fam = _family(family)
    m = fam.m
    a, b = m - 2, m - 4
    s = isqrt(b * b + 8 * a * n)
    lo = -((s - b) // (2 * a))  # ceil((b - s) / 2a)
    hi = (b + s) // (2 * a)
    while polygonal_number(fam, lo - 1) <= n:
        lo -= 1
    while polygonal_number(fam, lo) > n:
        lo += 1
    while polygonal_number(fam, hi + 1) <= n:
        hi += 1
    while polygonal_number(fam, hi) > n:
        hi -= 1
    return range(lo, hi + 1)


def polygonal_values(family, bound: int) -> np.ndarray:
    """Multiplicities: out[v] = #{x : p_m(x) = v} for 0 <= v <= bound."""
    fam = _family(family)
    r = coordinate_range(fam, bound)
    xs = np.arange(r.start, r.stop, dtype=np.int64)
    vals = ((fam.m - 2) * xs * xs - (fam.m - 4) * xs) // 2
    return np.bincount(vals, minlength=bound + 1)[: bound + 1]


def representation_count(family, n: int) -> int:
    """Ordered triples (x, y, z) in Z^3 with p_m(x) + p_m(y) + p_m(z) = n.

    x and y run over their exact ranges; z is recovered from the quadratic
    formula, i.e. (m-2)z^2 - (m-4)z = 2t must have a square discriminant.
    """
    fam = _family(family)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    m = fam.m
    a, b = m - 2, m - 4
    r = coordinate_range(fam, n)
    xs = np.arange(r.start, r.stop, dtype=np.int64)
    vals = (a * xs * xs - b * xs) // 2
    total = 0
    for v in vals:
        t = n - v - vals
        t = t[t >= 0]
        if not t.size:
            continue
        disc = b * b + 8 * a * t
        s = np.rint(np.sqrt(disc.astype(np.float64))).astype(np.int64)
        for adj in (-1, 1):
            fix = (s + adj) * (s + adj) == disc
            s = np.where(fix, s + adj, s)
        square = s * s == disc
        s = s[square]
        if not s.size:
            continue
        plus = (b + s) % (2 * a) == 0
        minus = ((b - s) % (2 * a) == 0) & (s > 0)
        total += int(plus.sum() + minus.sum())
    return total


def _shift_or(src: np.ndarray, shifts: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=bool)
    for v in shifts:
        np.logical_or(out[v:], src[: size - v], out=out[v:])
    return out


def represented_mask(family, bound: int, workers: int = 1) -> np.ndarray:
    """Boolean array: entry n is True iff P_m represents n, for 0 <= n <= bound."""
    fam = _family(family)
    size = bound + 1
    values = np.flatnonzero(polygonal_values(fam, bound))
    single = np.zeros(size, dtype=bool)
    single[values] = True
    workers = max(1, int(workers))
    chunks = [values[i::workers] for i in range(workers)]
    mask = single
    for _ in range(2):
        if workers == 1:
            mask = _shift_or(mask, values, size)
        else:
            src = mask
            with ThreadPoolExecutor(workers) as pool:
                parts = list(pool.map(lambda c: _shift_or(src, c, size), chunks))
            mask = np.logical_or.reduce(parts)
    return mask


def exceptional_set(family, bound: int, workers: int = 1) -> list[int]:
    """Every n <= bound with no representation, ascending.

    0 is always represented, so the result agrees with the positive-integer
    convention for exceptional sets.
    """
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    mask = represented_mask(family, bound, workers)
    return [int(n) for n in np.flatnonzero(~mask)]


def classify_exception(family, n: int) -> ExceptionRecord:
    fam = _family(family)
    if representation_count(fam, n):
        raise ValueError(f"{n} is represented by P_{fam.m}; not an exception")
    ell = ell_of(fam, n)
    return ExceptionRecord(fam.m, n, ell, is_square_class_3(ell))
