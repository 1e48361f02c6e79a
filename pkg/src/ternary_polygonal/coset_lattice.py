"""Translated sublattices of Z^3 and their representation numbers.

A coset is stored in Euclidean coordinates as {v in Z^3 : v_i = rho_i mod M}.
For P_m this is the lattice <(m-2)^2, ...> + nu rescaled by 1/(m-2) (m even)
or 1/(2(m-2)) (m odd), which keeps the enumeration over small integers.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .polygonal import _family
from .qseries import QSeries

__all__ = [
    "CosetZ3",
    "coset_for",
    "rep_count",
    "theta_series",
    "signed_permutations",
    "automorph_count",
]


@dataclass(frozen=True)
class CosetZ3:
    modulus: int
    residues: tuple[int, int, int]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if len(self.residues) != 3:
            raise ValueError("a coset of Z^3 needs three residues")
        object.__setattr__(
            self, "residues", tuple(int(r) % self.modulus for r in self.residues))

    def negate(self) -> "CosetZ3":
        return CosetZ3(self.modulus, tuple(-r for r in self.residues))

    def contains(self, v) -> bool:
        return all((x - r) % self.modulus == 0 for x, r in zip(v, self.residues))

    def label(self) -> str:
        return "({},{},{}) mod {}".format(*self.residues, self.modulus)


def coset_for(family) -> CosetZ3:
    """Coset whose norm-ell vectors correspond to solutions of P_m = n.

    m even: X = (m-2)x + (m-4)/2, so X = (m-4)/2 mod m-2.
    m odd:  X = 2(m-2)x + (m-4), so X = m-4 mod 2(m-2).
    The sign of the shift is +; negating it gives equal counts.
    """
    m = _family(family).m
    if m % 4 == 0:
        warnings.warn(f"m={m} is divisible by 4; the coset carries a mod-8 obstruction",
                      stacklevel=2)
    if m % 2 == 0:
        M, rho = m - 2, (m - 4) // 2
    else:
        M, rho = 2 * (m - 2), m - 4
    return CosetZ3(M, (rho, rho, rho))


def _class_values(residue: int, modulus: int, limit: int) -> np.ndarray:
    """Integers v = residue mod modulus with |v| <= limit, ascending."""
    start = residue - modulus * ((residue + limit) // modulus)
    return np.arange(start, limit + 1, modulus, dtype=np.int64)


def rep_count(coset: CosetZ3, ell: int) -> int:
    """Number of (X, Y, Z) in the coset with X^2 + Y^2 + Z^2 = ell."""
    if ell < 0:
        raise ValueError(f"ell must be nonnegative, got {ell}")
    M = coset.modulus
    rx, ry, rz = coset.residues
    lim = isqrt(ell)
    xs = _class_values(rx, M, lim)
    ys = _class_values(ry, M, lim)
    total = 0
    for x in xs:
        rest = ell - int(x) * int(x) - ys * ys
        rest = rest[rest >= 0]
        if not rest.size:
            continue
        z = np.rint(np.sqrt(rest.astype(np.float64))).astype(np.int64)
        z = np.where((z + 1) * (z + 1) <= rest, z + 1, z)
        z = np.where(z * z > rest, z - 1, z)
        sq = z * z == rest
        z = z[sq]
        total += int(((z - rz) % M == 0).sum())
        total += int((((-z - rz) % M == 0) & (z > 0)).sum())
    return total


def theta_series(coset: CosetZ3, bound: int) -> QSeries:
    """Theta series of the coset, sum of q^(X^2+Y^2+Z^2), truncated at bound."""
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    lim = isqrt(bound)
    M = coset.modulus
    xs, ys, zs = (_class_values(r, M, lim) for r in coset.residues)
    counts = np.zeros(bound + 1, dtype=np.int64)
    yz = (ys[:, None] ** 2 + zs[None, :] ** 2).ravel()
    yz = yz[yz <= bound]
    for x in xs:
        norms = yz + int(x) * int(x)
        norms = norms[norms <= bound]
        counts += np.bincount(norms, minlength=bound + 1)
    return QSeries.from_counts(counts, bound)


def signed_permutations(proper_only: bool = False):
    """The 48 signed 3x3 permutation matrices as (perm, signs) pairs."""
    out = []
    for perm in itertools.permutations(range(3)):
        parity = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j]) % 2
        for signs in itertools.product((1, -1), repeat=3):
            det = (-1) ** parity * signs[0] * signs[1] * signs[2]
            if proper_only and det != 1:
                continue
            out.append((perm, signs))
    return out


def _act(sigma, v):
    perm, signs = sigma
    return tuple(signs[i] * v[perm[i]] for i in range(3))


def automorph_count(coset: CosetZ3, proper_only: bool = False) -> int:
    """Signed coordinate permutations that map the coset onto itself."""
    rho = coset.residues
    return sum(1 for s in signed_permutations(proper_only)
               if CosetZ3(coset.modulus, _act(s, rho)) == coset)
