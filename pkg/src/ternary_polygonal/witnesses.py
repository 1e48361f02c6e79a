"""Non-represented integers for m = 2 mod 12, and exception surveys.

Write m = 12r + 2.  Then P_m = n becomes
    24rn + 3(6r-1)^2 = X^2 + Y^2 + Z^2,   X = Y = Z = 6r-1 (mod 12r),
and whenever the left side equals 3 ell^2 for a prime ell = 1 (mod 12) (r odd)
or ell = 7 (mod 12) (r even), the equation has no solution.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from itertools import count as _count

from .class_numbers import is_prime
from .coset_lattice import coset_for, rep_count
from .polygonal import (_family, classify_exception, exceptional_set, ell_of,
                        representation_count)

__all__ = [
    "WitnessSpec",
    "WitnessReport",
    "WitnessSearchError",
    "witness_spec",
    "target_residue",
    "witness_n",
    "integrality_residue",
    "primes_in_class",
    "find_witnesses",
    "SurveyReport",
    "survey",
    "reports_to_csv",
]


class WitnessSearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class WitnessSpec:
    m: int
    r: int
    target_residue: int


@dataclass(frozen=True)
class WitnessReport:
    m: int
    ell: int
    n: int
    verified: bool
    identity_ok: bool = True
    coset_count: int = 0
    polygonal_count: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def witness_spec(m: int) -> WitnessSpec:
    m = _family(m).m
    if m % 12 != 2:
        raise ValueError(f"witness families need m = 2 mod 12, got m={m}")
    r = (m - 2) // 12
    return WitnessSpec(m, r, 1 if r % 2 else 7)


def target_residue(m: int) -> int:
    return witness_spec(m).target_residue


def witness_n(m: int, ell: int) -> int | None:
    """n with 24rn + 3(6r-1)^2 = 3 ell^2, if that n is a nonnegative integer."""
    r = witness_spec(m).r
    if ell % 2 == 0:
        raise ValueError(f"ell must be odd, got {ell}")
    num = 3 * ell * ell - 3 * (6 * r - 1) ** 2
    if num < 0 or num % (24 * r):
        return None
    return num // (24 * r)


def integrality_residue(m: int) -> int:
    """The c with: witness_n(m, ell) is an integer iff ell^2 = c (mod 8r).

    Equals (6r-1)^2 mod 8r, which is 1 for odd r and 4r+1 for even r.
    """
    r = witness_spec(m).r
    return (6 * r - 1) ** 2 % (8 * r)


def primes_in_class(residue: int, modulus: int, start: int = 2, ceiling: int | None = None):
    """Primes p >= start with p = residue (mod modulus), ascending."""
    first = start + (residue - start) % modulus
    for p in _count(first, modulus):
        if ceiling is not None and p > ceiling:
            return
        if is_prime(p):
            yield p


def _verify(m: int, ell: int, n: int) -> WitnessReport:
    r = (m - 2) // 12
    identity_ok = 24 * r * n + 3 * (6 * r - 1) ** 2 == 3 * ell * ell == ell_of(m, n)
    cc = rep_count(coset_for(m), 3 * ell * ell)
    pc = representation_count(m, n)
    return WitnessReport(m, ell, n, identity_ok and cc == 0 and pc == 0, identity_ok, cc, pc)


def find_witnesses(m: int, count: int, prime_ceiling: int = 10 ** 6) -> list[WitnessReport]:
    """The first `count` primes in the target class giving an integral n, each brute-force checked."""
    spec = witness_spec(m)
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for ell in primes_in_class(spec.target_residue, 12, 5, prime_ceiling):
        n = witness_n(m, ell)
        if n is None:
            continue
        rep = _verify(m, ell, n)
        if not rep.verified:
            raise WitnessSearchError(f"predicted witness failed verification: {rep}")
        out.append(rep)
        if len(out) == count:
            return out
    raise WitnessSearchError(
        f"only {len(out)} of {count} witnesses for m={m} with primes up to {prime_ceiling}")


@dataclass
class SurveyReport:
    m: int
    bound: int
    exceptions: list
    threshold: int | None  # largest exception outside the 3r^2 square class

    @property
    def square_class_count(self) -> int:
        return sum(1 for e in self.exceptions if e.square_class_3)

    def above_threshold_all_square_class(self) -> bool:
        t = -1 if self.threshold is None else self.threshold
        return all(e.square_class_3 for e in self.exceptions if e.n > t)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "bound": self.bound,
            "exception_count": len(self.exceptions),
            "square_class_3_count": self.square_class_count,
            "largest_non_square_class_exception": self.threshold,
            "exceptions": [e.to_dict() for e in self.exceptions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "ell", "square_class_3"])
        for e in self.exceptions:
            w.writerow([e.n, e.ell, int(e.square_class_3)])
        return buf.getvalue()


def survey(m: int, bound: int, workers: int = 1) -> SurveyReport:
    fam = _family(m)
    # n = 0 is always represented, so every entry is a positive exception
    exc = [classify_exception(fam, n) for n in exceptional_set(fam, bound, workers)]
    others = [e.n for e in exc if not e.square_class_3]
    return SurveyReport(fam.m, bound, exc, max(others) if others else None)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "ell", "n", "verified", "identity_ok", "coset_count", "polygonal_count"])
    for r in reports:
        w.writerow([r.m, r.ell, r.n, int(r.verified), int(r.identity_ok),
                    r.coset_count, r.polygonal_count])
    return buf.getvalue()
