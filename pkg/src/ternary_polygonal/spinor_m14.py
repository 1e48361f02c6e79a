"""The genus of the coset attached to P_14 and its two spinor genera.

In Euclidean coordinates every coset lives in Z^3 with modulus 12:

    nu  = (5, 5, 5)    5nu = (1, 1, 1)
    mu  = (5, 1, 1)    5mu = (1, 5, 5)

{nu, mu} is one spinor genus, {5nu, 5mu} the other.  The genus is taken
as given; nothing here searches for it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .class_numbers import hurwitz, is_prime
from .coset_lattice import CosetZ3, automorph_count, rep_count, theta_series
from .qseries import QSeries, dilate, first_difference, sieve, theta_cube, unary_theta

__all__ = [
    "GenusM14",
    "GENUS_M14",
    "VerificationError",
    "coset_thetas",
    "genus_theta",
    "spinor_theta",
    "eisenstein_coefficient",
    "SiegelWeilReport",
    "verify_siegel_weil",
    "sturm_index",
    "sturm_coefficient_count",
    "STURM_LEVEL",
    "scan_3ell2",
    "SieveProbeReport",
    "sieve_identity_probe",
]

STURM_LEVEL = 576  # 4 * 12^2


class VerificationError(AssertionError):
    """A computed identity or predicted vanishing failed."""


@dataclass(frozen=True)
class GenusM14:
    nu: CosetZ3 = CosetZ3(12, (5, 5, 5))
    nu5: CosetZ3 = CosetZ3(12, (1, 1, 1))
    mu: CosetZ3 = CosetZ3(12, (5, 1, 1))
    mu5: CosetZ3 = CosetZ3(12, (1, 5, 5))
    weights: dict = field(default_factory=lambda: {"nu": 6, "nu5": 6, "mu": 2, "mu5": 2})

    @property
    def cosets(self) -> dict[str, CosetZ3]:
        return {"nu": self.nu, "nu5": self.nu5, "mu": self.mu, "mu5": self.mu5}

    @property
    def spinor_split(self) -> dict[str, tuple[str, str]]:
        return {"plus": ("nu", "mu"), "minus": ("nu5", "mu5")}

    def check_weights(self) -> bool:
        return all(automorph_count(c) == self.weights[k] for k, c in self.cosets.items())


GENUS_M14 = GenusM14()


@lru_cache(maxsize=8)
def coset_thetas(bound: int) -> dict[str, QSeries]:
    return {k: theta_series(c, bound) for k, c in GENUS_M14.cosets.items()}


def _weighted(names, bound: int) -> QSeries:
    th = coset_thetas(bound)
    out = QSeries(bound)
    for k in names:
        out = out + th[k] * Fraction(1, GENUS_M14.weights[k])
    return out


def genus_theta(bound: int) -> QSeries:
    """3/4 * (T_5nu/6 + T_5mu/2 + T_nu/6 + T_mu/2)."""
    return _weighted(("nu5", "mu5", "nu", "mu"), bound) * Fraction(3, 4)


def spinor_theta(which: str, bound: int) -> QSeries:
    """3/2 * (T_nu/6 + T_mu/2) for 'plus', the 5nu, 5mu analogue for 'minus'."""
    try:
        names = GENUS_M14.spinor_split[which]
    except KeyError:
        raise ValueError(f"which must be 'plus' or 'minus', got {which!r}") from None
    return _weighted(names, bound) * Fraction(3, 2)


def eisenstein_coefficient(n: int) -> Fraction:
    """Genus coefficient at n = 3 mod 24 with 9 not dividing n, via 24 H(n) / 64.

    Independent of any coset enumeration.
    """
    if n % 24 != 3 or n % 9 == 0:
        raise ValueError(f"class-number route needs n = 3 mod 24 and 9 not dividing n, got {n}")
    return 24 * hurwitz(n) / 64


@dataclass
class SiegelWeilReport:
    bound: int
    plus_ok: bool
    minus_ok: bool
    plus_discrepancy: tuple | None = None
    minus_discrepancy: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.plus_ok and self.minus_ok

    def to_dict(self) -> dict:
        def disc(d):
            if d is None:
                return None
            n, lhs, rhs = d
            return {"exponent": n, "spinor": str(lhs), "genus_with_unary": str(rhs)}

        return {
            "bound": self.bound,
            "highest_exponent_checked": self.bound,
            "identities": {
                "spn(nu) = gen - theta_1_3_12/8": self.plus_ok,
                "spn(5nu) = gen + theta_1_3_12/8": self.minus_ok,
            },
            "verified": self.ok,
            "discrepancies": [d for d in (disc(self.plus_discrepancy),
                                          disc(self.minus_discrepancy)) if d],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify_siegel_weil(bound: int = 27648) -> SiegelWeilReport:
    gen = genus_theta(bound)
    unary = unary_theta(1, 3, 12, bound) * Fraction(1, 8)
    plus = first_difference(spinor_theta("plus", bound), gen - unary)
    minus = first_difference(spinor_theta("minus", bound), gen + unary)
    return SiegelWeilReport(bound, plus is None, minus is None, plus, minus)


def _prime_divisors(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if n % p == 0 and is_prime(p)]


def sturm_index(N: int) -> int:
    """[SL_2(Z) : Gamma_1(N)] = N^2 prod_{p | N} (1 - 1/p^2)."""
    if N < 1:
        raise ValueError(f"level must be positive, got {N}")
    idx = Fraction(N * N)
    for p in _prime_divisors(N):
        idx *= 1 - Fraction(1, p * p)
    assert idx.denominator == 1
    return int(idx)


def sturm_coefficient_count(N: int, weight: Fraction = Fraction(3, 2)) -> int:
    """Coefficients that pin down a weight-k form on Gamma_1(N): k/12 times the index."""
    count = Fraction(weight) / 12 * sturm_index(N)
    assert count.denominator == 1
    return int(count)


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(n ** 0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


def scan_3ell2(prime_bound: int) -> list[int]:
    """Check that 3 ell^2 misses (5,5,5) mod 12 for ell = 1 mod 12 and (1,1,1) for ell = 7.

    Returns the primes checked; raises VerificationError on the first counterexample.
    """
    if prime_bound < 5:
        raise ValueError("prime_bound must be at least 5")
    checked = []
    for ell in _primes_upto(prime_bound):
        coset = {1: GENUS_M14.nu, 7: GENUS_M14.nu5}.get(ell % 12)
        if coset is None:
            continue
        count = rep_count(coset, 3 * ell * ell)
        if count:
            raise VerificationError(
                f"{count} solutions of X^2+Y^2+Z^2 = 3*{ell}^2 in {coset.label()}")
        checked.append(ell)
    return checked


@dataclass
class SieveProbeReport:
    bound: int
    residual: QSeries
    printed_matches: bool
    printed_first_mismatch: tuple | None
    dilate9_matches: bool
    dilate9_first_mismatch: tuple | None

    @property
    def matching_form(self) -> str | None:
        if self.dilate9_matches:
            return "r3(n/9)"
        if self.printed_matches:
            return "8*r3(n/3)"
        return None

    def to_dict(self) -> dict:
        def mm(d):
            return None if d is None else {"exponent": d[0], "residual": str(d[1]),
                                           "candidate": str(d[2])}

        return {
            "bound": self.bound,
            "residual_definition": "sieve(theta^3, 24, 3) - 48 * weighted coset sum",
            "candidates": {
                "8*sieve(theta^3(3tau), 24, 3)": {
                    "matches": self.printed_matches,
                    "first_mismatch": mm(self.printed_first_mismatch)},
                "sieve(theta^3(9tau), 24, 3)": {
                    "matches": self.dilate9_matches,
                    "first_mismatch": mm(self.dilate9_first_mismatch)},
            },
            "matching_form": self.matching_form,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def sieve_identity_probe(bound: int) -> SieveProbeReport:
    """Compare the residual of the 24n+3 splitting against two closed forms."""
    cube = theta_cube(bound)
    g = _weighted(("nu5", "mu5", "nu", "mu"), bound)
    residual = sieve(cube, 24, 3) - g * 48
    printed = sieve(_dilated_cube(3, bound), 24, 3) * 8
    nine = sieve(_dilated_cube(9, bound), 24, 3)
    p_diff = first_difference(residual, printed, bound)
    n_diff = first_difference(residual, nine, bound)
    return SieveProbeReport(bound, residual, p_diff is None, p_diff, n_diff is None, n_diff)


def _dilated_cube(k: int, bound: int) -> QSeries:
    """theta^3(k tau) truncated at bound.

    dilate(theta_cube(bound // k), k) reaches every multiple of k up to bound;
    the other exponents are zero, so the bound can be widened exactly.
    """
    return QSeries(bound, dilate(theta_cube(bound // k), k).coeffs)
