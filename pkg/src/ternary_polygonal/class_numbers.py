"""Kronecker symbols, class numbers of negative discriminants, Hurwitz class numbers.

Class numbers come from counting reduced forms, never from an analytic
formula, so they can serve as an independent check on theta coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

__all__ = [
    "kronecker",
    "is_discriminant",
    "reduced_forms",
    "class_number",
    "unit_weight",
    "hurwitz",
    "hurwitz_3ellsq",
    "r3_via_class_number",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % p for p in range(3, isqrt(n) + 1, 2))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n)."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out 2 from n: (a/2) = 0 for even a, else +1 if a = +-1 mod 8, -1 if a = +-3 mod 8
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_discriminant(D: int) -> bool:
    return D < 0 and D % 4 in (0, 1)


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """Reduced primitive forms (a, b, c) with b^2 - 4ac = D.

    Reduced: |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
    """
    if not is_discriminant(D):
        raise ValueError(f"{D} is not a negative discriminant")
    d = -D
    forms = []
    for a in range(1, isqrt(d // 3) + 1):
        for b in range(-a + 1, a + 1):
            num = b * b + d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            forms.append((a, b, c))
    return forms


@lru_cache(maxsize=None)
def class_number(D: int) -> int:
    return len(reduced_forms(D))


def unit_weight(D: int) -> int:
    """Half the number of units of the order of discriminant D."""
    return {-3: 3, -4: 2}.get(D, 1)


@lru_cache(maxsize=None)
def hurwitz(d: int) -> Fraction:
    """H(d) = sum over f with f^2 | d and -d/f^2 a discriminant of h(-d/f^2)/u(-d/f^2)."""
    if d <= 0 or d % 4 not in (0, 3):
        raise ValueError(f"Hurwitz class number needs d > 0 with d = 0, 3 mod 4, got {d}")
    total = Fraction(0)
    f = 1
    while f * f <= d:
        if d % (f * f) == 0:
            D = -(d // (f * f))
            if is_discriminant(D):
                total += Fraction(class_number(D), unit_weight(D))
        f += 1
    return total


def hurwitz_3ellsq(ell: int) -> Fraction:
    """Closed form H(3 ell^2) = (ell + 1 - (-3/ell)) / 3 for a prime ell > 3."""
    if ell <= 3 or not is_prime(ell):
        raise ValueError(f"need a prime > 3, got {ell}")
    return Fraction(ell + 1 - kronecker(-3, ell), 3)


def r3_via_class_number(n: int) -> int:
    """Sums of three squares for n = 3 mod 8, as 24 H(n)."""
    if n % 8 != 3:
        raise ValueError(f"need n = 3 mod 8, got {n}")
    value = 24 * hurwitz(n)
    assert value.denominator == 1
    return int(value)
