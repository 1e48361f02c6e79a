"""Truncated q-series with exact rational coefficients.

A :class:`QSeries` knows its truncation bound: coefficients are defined for
every exponent ``0 <= n <= bound`` and asking for anything past the bound is
an error rather than a silent zero.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "QSeries",
    "TruncationError",
    "theta_cube",
    "unary_theta",
    "sieve",
    "dilate",
    "add",
    "scale",
    "equal_up_to",
    "first_difference",
]


class TruncationError(ValueError):
    """Raised when a coefficient beyond a series' truncation bound is requested."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("QSeries coefficients must be exact, got float")
    return Fraction(value)


@dataclass(frozen=True)
class QSeries:
    bound: int
    coeffs: Mapping[int, Fraction]

    def __init__(self, bound: int, coeffs: Mapping[int, object] | Iterable = ()):
        if bound < 0:
            raise ValueError(f"bound must be nonnegative, got {bound}")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, Fraction] = {}
        for n, c in items:
            n = int(n)
            if n < 0:
                raise ValueError(f"negative exponent {n}")
            if n > bound:
                raise TruncationError(f"exponent {n} exceeds bound {bound}")
            c = _as_fraction(c)
            if c:
                clean[n] = clean.get(n, Fraction(0)) + c
                if not clean[n]:
                    del clean[n]
        object.__setattr__(self, "bound", int(bound))
        object.__setattr__(self, "coeffs", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def from_counts(cls, counts, bound: int | None = None) -> "QSeries":
        """Build from a dense integer array indexed by exponent."""
        counts = np.asarray(counts)
        if bound is None:
            bound = len(counts) - 1
        nz = np.flatnonzero(counts[: bound + 1])
        return cls(bound, {int(n): int(counts[n]) for n in nz})

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(f"negative exponent {n}")
        if n > self.bound:
            raise TruncationError(f"exponent {n} exceeds bound {self.bound}")
        return self.coeffs.get(n, Fraction(0))

    coefficient = __getitem__

    def support(self) -> list[int]:
        return list(self.coeffs)

    def truncate(self, bound: int) -> "QSeries":
        if bound > self.bound:
            raise TruncationError(f"cannot extend bound {self.bound} to {bound}")
        return QSeries(bound, {n: c for n, c in self.coeffs.items() if n <= bound})

    def __add__(self, other: "QSeries") -> "QSeries":
        return add(self, other)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return add(self, scale(other, -1))

    def __neg__(self) -> "QSeries":
        return scale(self, -1)

    def __mul__(self, k) -> "QSeries":
        return scale(self, k)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.bound == other.bound and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.bound, tuple(self.coeffs.items())))

    def __repr__(self) -> str:
        head = ", ".join(f"{n}: {c}" for n, c in list(self.coeffs.items())[:6])
        more = ", ..." if len(self.coeffs) > 6 else ""
        return f"QSeries(bound={self.bound}, {{{head}{more}}})"

    # serialization: exact strings only

    def to_rows(self) -> list[tuple[int, int, int]]:
        return [(n, c.numerator, c.denominator) for n, c in self.coeffs.items()]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exponent", "numerator", "denominator"])
        w.writerows(self.to_rows())
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, bound: int) -> "QSeries":
        rows = list(csv.reader(io.StringIO(text)))
        if rows and rows[0] == ["exponent", "numerator", "denominator"]:
            rows = rows[1:]
        return cls(bound, {int(e): Fraction(int(a), int(b)) for e, a, b in rows})

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "coefficients": {str(n): str(c) for n, c in self.coeffs.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "QSeries":
        return cls(int(data["bound"]),
                   {int(n): Fraction(c) for n, c in data["coefficients"].items()})

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_dict(json.loads(text))


def theta_cube(bound: int) -> QSeries:
    """Coefficients r_3(n) of Theta^3, built by convolving the one-variable theta series."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    theta = np.zeros(bound + 1, dtype=np.int64)
    theta[0] = 1
    k = 1
    while k * k <= bound:
        theta[k * k] = 2
        k += 1
    sq = np.convolve(theta, theta)[: bound + 1]
    cube = np.convolve(sq, theta)[: bound + 1]
    return QSeries.from_counts(cube, bound)


def unary_theta(h: int, t: int, N: int, bound: int) -> QSeries:
    """sum of r q^(t r^2) over r congruent to h modulo N/t."""
    if t < 1 or N < 1 or N % t:
        raise ValueError(f"need t | N with t, N positive, got t={t}, N={N}")
    if any(t % (p * p) == 0 for p in range(2, isqrt(t) + 1)):
        raise ValueError(f"t={t} is not squarefree")
    step = N // t
    if not 0 <= h < step:
        raise ValueError(f"h must lie in [0, {step}), got {h}")
    coeffs: dict[int, int] = {}
    rmax = isqrt(bound // t)
    # smallest r >= -rmax in the class
    r = h - step * ((h + rmax) // step)
    while r <= rmax:
        e = t * r * r
        coeffs[e] = coeffs.get(e, 0) + r
        r += step
    return QSeries(bound, coeffs)


def sieve(f: QSeries, N: int, c: int) -> QSeries:
    """Keep only the coefficients at exponents congruent to c mod N."""
    if N < 1 or not 0 <= c < N:
        raise ValueError(f"need 0 <= c < N, got c={c}, N={N}")
    return QSeries(f.bound, {n: a for n, a in f.coeffs.items() if n % N == c})


def dilate(f: QSeries, k: int) -> QSeries:
    """f(q) -> f(q^k)."""
    if k < 1:
        raise ValueError(f"dilation factor must be >= 1, got {k}")
    return QSeries(k * f.bound, {k * n: a for n, a in f.coeffs.items()})


def add(f: QSeries, g: QSeries) -> QSeries:
    bound = min(f.bound, g.bound)
    out = {n: a for n, a in f.coeffs.items() if n <= bound}
    for n, b in g.coeffs.items():
        if n <= bound:
            out[n] = out.get(n, Fraction(0)) + b
    return QSeries(bound, out)


def scale(f: QSeries, k) -> QSeries:
    k = _as_fraction(k)
    return QSeries(f.bound, {n: k * a for n, a in f.coeffs.items()})


def _check_bound(f: QSeries, g: QSeries, bound: int | None) -> int:
    limit = min(f.bound, g.bound)
    if bound is None:
        return limit
    if bound > limit:
        raise TruncationError(f"comparison bound {bound} exceeds operand bound {limit}")
    return bound


def first_difference(f: QSeries, g: QSeries, bound: int | None = None):
    """Smallest exponent <= bound where f and g differ, as (n, f[n], g[n]), or None."""
    bound = _check_bound(f, g, bound)
    keys = sorted(n for n in set(f.coeffs) | set(g.coeffs) if n <= bound)
    for n in keys:
        if f[n] != g[n]:
            return n, f[n], g[n]
    return None


def equal_up_to(f: QSeries, g: QSeries, bound: int | None = None) -> bool:
    return first_difference(f, g, bound) is None
