"""Exact natural-number arithmetic and congruence classes.

Every other module builds on the helpers here: gcd/lcm, the extended
Euclidean algorithm, and the Chinese-Remainder intersection of two
congruence classes aN+b and cN+d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

# Codomain of the p-adic norm; always kept in lowest terms by Fraction.
Rational = Fraction


class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""
    pass


def check_natural(value, name: str = "value") -> int:
    """Return value if it is a non-negative int, else raise DomainError."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be a natural number, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")
    return value


def check_positive(value, name: str = "value") -> int:
    check_natural(value, name)
    if value == 0:
        raise DomainError(f"{name} must be at least 1")
    return value


@dataclass(frozen=True)
class CongruenceClass:
    """The arithmetic progression modulus*N + residue."""

    modulus: int
    residue: int = 0

    def __post_init__(self):
        check_positive(self.modulus, "modulus")
        check_natural(self.residue, "residue")
        if self.residue >= self.modulus:
            raise DomainError(
                f"residue {self.residue} must be smaller than modulus {self.modulus}"
            )

    @property
    def is_full(self) -> bool:
        return self.modulus == 1

    def __contains__(self, n) -> bool:
        return member(self, n)

    def __str__(self) -> str:
        if self.is_full:
            return "N"
        if self.residue == 0:
            return f"{self.modulus}N"
        return f"{self.modulus}N+{self.residue}"


FULL = CongruenceClass(1, 0)


def gcd(m: int, n: int) -> int:
    """Greatest common divisor of two naturals, not both zero."""
    check_natural(m, "m")
    check_natural(n, "n")
    if m == 0 and n == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(m, n)


def lcm(m: int, n: int) -> int:
    """Least common multiple, computed as m*n / gcd(m, n)."""
    check_positive(m, "m")
    check_positive(n, "n")
    return m * n // math.gcd(m, n)


def extended_gcd(m: int, n: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(m, n) and x*m + y*n = g.

    The cofactors are signed; this is the only place in the package where
    negative integers appear.
    """
    check_natural(m, "m")
    check_natural(n, "n")
    if m == 0 and n == 0:
        raise DomainError("extended_gcd(0, 0) is undefined")
    if m and n % m == 0:
        return m, 1, 0

    old_r, r = m, n
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def crt_witness(c1: CongruenceClass, c2: CongruenceClass) -> Optional[int]:
    """Least natural number lying in both classes, or None."""
    a, b = c1.modulus, c1.residue
    c, d = c2.modulus, c2.residue
    g, x, _ = extended_gcd(a, c)
    if (d - b) % g:
        return None
    step = c // g
    t = ((d - b) // g * x) % step
    return (b + a * t) % (a * step)


def intersect(c1: CongruenceClass, c2: CongruenceClass) -> Optional[CongruenceClass]:
    """Chinese-Remainder intersection of two congruence classes.

    Returns lcm(a, c)N + y when |b - d| is a multiple of gcd(a, c), with y the
    least non-negative witness, and None when the classes are disjoint.
    """
    y = crt_witness(c1, c2)
    if y is None:
        return None
    return CongruenceClass(lcm(c1.modulus, c2.modulus), y)


def member(c: CongruenceClass, n: int) -> bool:
    check_natural(n, "n")
    return n % c.modulus == c.residue


def is_prime(n: int) -> bool:
    check_natural(n, "n")
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int, name: str = "p") -> int:
    if not is_prime(check_natural(p, name)):
        raise DomainError(f"{name} must be prime, got {p}")
    return p


def prime_factors(n: int) -> List[int]:
    """Prime factors of n >= 1 by trial division, in nondecreasing order."""
    check_positive(n, "n")
    factors = []
    f = 2
    while f * f <= n:
        while n % f == 0:
            factors.append(f)
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        factors.append(n)
    return factors
