"""The bicyclic monoid and Leech's monoid, and their embeddings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arith import NormalForm, normal_form
from .config import config_value
from .numtheory import check_natural, check_positive, check_prime, gcd, lcm
from .oracle import FinitePartialInjection


@dataclass(frozen=True)
class BicyclicElement:
    """[b, a] = +_b +_a‡, i.e. n -> n - a + b for n >= a."""

    b: int
    a: int

    def __post_init__(self):
        check_natural(self.b, "b")
        check_natural(self.a, "a")

    def __mul__(self, other: "BicyclicElement") -> "BicyclicElement":
        return bicyclic_compose(self, other)


@dataclass(frozen=True)
class LeechElement:
    """[m, n] = x_m x_n‡, i.e. x -> mx/n on nN."""

    m: int
    n: int

    def __post_init__(self):
        check_positive(self.m, "m")
        check_positive(self.n, "n")

    def __mul__(self, other: "LeechElement") -> "LeechElement":
        return leech_compose(self, other)


BICYCLIC_IDENTITY = BicyclicElement(0, 0)
LEECH_IDENTITY = LeechElement(1, 1)


def monus(y: int, x: int) -> int:
    """Truncated subtraction."""
    check_natural(y, "y")
    check_natural(x, "x")
    return y - x if x <= y else 0


def bicyclic_compose(lhs: BicyclicElement, rhs: BicyclicElement) -> BicyclicElement:
    """(d,c)(b,a) = (d + (b - c), (c - b) + a) with truncated subtraction."""
    d, c = lhs.b, lhs.a
    b, a = rhs.b, rhs.a
    return BicyclicElement(d + monus(b, c), monus(c, b) + a)


def bicyclic_dagger(e: BicyclicElement) -> BicyclicElement:
    return BicyclicElement(e.a, e.b)


def bicyclic_to_window(e: BicyclicElement, window: Optional[int] = None) -> FinitePartialInjection:
    """Graph of +_b +_a‡ on {0..window}."""
    window = config_value("window", window)
    graph = {}
    for n in range(e.a, window + 1):
        y = n - e.a + e.b
        if y > window:
            break
        graph[n] = y
    return FinitePartialInjection(window, graph)


def leech_compose(lhs: LeechElement, rhs: LeechElement) -> LeechElement:
    """(m,n)(p,q) = (mp/gcd(n,p), nq/gcd(n,p))."""
    m, n = lhs.m, lhs.n
    p, q = rhs.m, rhs.n
    g = gcd(n, p)
    return LeechElement(m * p // g, n * q // g)


def leech_compose_lcm(lhs: LeechElement, rhs: LeechElement) -> LeechElement:
    """(m,n)(p,q) = (m lcm(n,p)/n, q lcm(n,p)/p)."""
    m, n = lhs.m, lhs.n
    p, q = rhs.m, rhs.n
    l = lcm(n, p)
    return LeechElement(m * l // n, q * l // p)


def leech_dagger(e: LeechElement) -> LeechElement:
    return LeechElement(e.n, e.m)


def leech_is_idempotent(e: LeechElement) -> bool:
    return e.m == e.n


def leech_embed(e: LeechElement) -> NormalForm:
    """[m, n] -> R‡_{m,0}R_{n,0}."""
    return normal_form(e.n, 0, e.m, 0)


def bicyclic_exp_embed(p: int, e: BicyclicElement) -> LeechElement:
    """[b, a] -> [p^b, p^a]."""
    check_prime(p)
    return LeechElement(p ** e.b, p ** e.a)


def bicyclic_embed_arith(p: int, e: BicyclicElement) -> NormalForm:
    """Route a bicyclic element into the arithmetic monoid through Leech's."""
    return leech_embed(bicyclic_exp_embed(p, e))
