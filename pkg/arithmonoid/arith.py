"""The arithmetic inverse monoid.

Non-zero elements are held in normal form R‡_{c,d}R_{a,b}: the unique
monotone partial injection from aN+b onto cN+d, undefined elsewhere. The
zero element is the nowhere-defined map.

Composition follows juxtaposition: ``compose(f, g)`` (or ``f * g``) applies
g first and f second.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .numtheory import (
    FULL,
    CongruenceClass,
    DomainError,
    check_natural,
    crt_witness,
    gcd,
    intersect,
    lcm,
    prime_factors,
)


@dataclass(frozen=True)
class Zero:
    """The nowhere-defined partial injection."""

    def __mul__(self, other: "ArithElement") -> "ArithElement":
        return compose(self, other)

    def __invert__(self) -> "Zero":
        return self

    def __repr__(self) -> str:
        return "ZERO"


@dataclass(frozen=True)
class NormalForm:
    """R‡_{c,d}R_{a,b} with dom = aN+b and img = cN+d."""

    dom: CongruenceClass
    img: CongruenceClass

    def __mul__(self, other: "ArithElement") -> "ArithElement":
        return compose(self, other)

    def __invert__(self) -> "NormalForm":
        return dagger(self)

    def __call__(self, n: int) -> Optional[int]:
        return apply(self, n)


ArithElement = Union[Zero, NormalForm]

ZERO = Zero()
IDENTITY = NormalForm(FULL, FULL)


def normal_form(a: int, b: int, c: int, d: int) -> NormalForm:
    """Build R‡_{c,d}R_{a,b}; moduli and residues are validated."""
    return NormalForm(CongruenceClass(a, b), CongruenceClass(c, d))


def generator(a: int, b: int) -> NormalForm:
    """R_{a,b}: maps aN+b onto N by n -> (n - b) / a."""
    return NormalForm(CongruenceClass(a, b), FULL)


def dagger_generator(a: int, b: int) -> NormalForm:
    """R‡_{a,b}: the total injection n -> an + b."""
    return NormalForm(FULL, CongruenceClass(a, b))


def partial_identity(c: CongruenceClass) -> NormalForm:
    return NormalForm(c, c)


def dagger(e: ArithElement) -> ArithElement:
    if isinstance(e, Zero):
        return e
    return NormalForm(e.img, e.dom)


def apply(e: ArithElement, n: int) -> Optional[int]:
    """Evaluate e at n; None where e is undefined."""
    check_natural(n, "n")
    if isinstance(e, Zero) or n % e.dom.modulus != e.dom.residue:
        return None
    return e.img.modulus * ((n - e.dom.residue) // e.dom.modulus) + e.img.residue


def determinant_apply(e: ArithElement, n: int) -> Optional[int]:
    """Evaluate through the 2x2 determinant form (cn + (ad - bc)) / a."""
    check_natural(n, "n")
    if isinstance(e, Zero) or n % e.dom.modulus != e.dom.residue:
        return None
    a, b = e.dom.modulus, e.dom.residue
    c, d = e.img.modulus, e.img.residue
    return (c * n + (a * d - b * c)) // a


def compose(f: ArithElement, g: ArithElement) -> ArithElement:
    """Normal form of f after g, by the CRT composition formula.

    With f = R‡_{G,H}R_{e,f'} and g = R‡_{c,d}R_{a,b}, the result is zero
    unless cN+d meets eN+f'; with r the CRT witness and gamma = gcd(c, e) it
    is R‡_{Gc/gamma, G(r-f')/e + H} R_{ae/gamma, a(r-d)/c + b}.
    """
    if isinstance(f, Zero) or isinstance(g, Zero):
        return ZERO
    r = crt_witness(g.img, f.dom)
    if r is None:
        return ZERO

    a, b = g.dom.modulus, g.dom.residue
    c, d = g.img.modulus, g.img.residue
    e, f_res = f.dom.modulus, f.dom.residue
    big_g, h = f.img.modulus, f.img.residue
    gamma = gcd(c, e)
    return normal_form(
        a * e // gamma,
        a * (r - d) // c + b,
        big_g * c // gamma,
        big_g * (r - f_res) // e + h,
    )


def compose_lcm_form(f: ArithElement, g: ArithElement) -> ArithElement:
    """The same composite, with moduli written through lcm(c, e)."""
    if isinstance(f, Zero) or isinstance(g, Zero):
        return ZERO
    meet_class = intersect(g.img, f.dom)
    if meet_class is None:
        return ZERO
    r, m = meet_class.residue, meet_class.modulus

    a, b = g.dom.modulus, g.dom.residue
    c, d = g.img.modulus, g.img.residue
    e, f_res = f.dom.modulus, f.dom.residue
    big_g, h = f.img.modulus, f.img.residue
    return normal_form(
        a * m // c,
        a * (r - d) // c + b,
        big_g * m // e,
        big_g * (r - f_res) // e + h,
    )


def compose_all(elements: Iterable[ArithElement]) -> ArithElement:
    """Left fold of compose; the empty product is the identity."""
    return reduce(compose, elements, IDENTITY)


def compose_generator_pair(c: int, d: int, a: int, b: int) -> NormalForm:
    """R_{c,d}R_{a,b} = R_{ac, ad+b}."""
    generator(c, d)
    generator(a, b)
    return generator(a * c, a * d + b)


def compose_dagger_pair(c: int, d: int, a: int, b: int) -> ArithElement:
    """R_{c,d}R‡_{a,b}, zero unless aN+b meets cN+d."""
    image = CongruenceClass(a, b)
    domain = CongruenceClass(c, d)
    r = crt_witness(image, domain)
    if r is None:
        return ZERO
    gamma = gcd(a, c)
    return normal_form(c // gamma, (r - b) // a, a // gamma, (r - d) // c)


def initial_idempotent(e: ArithElement) -> ArithElement:
    """e‡e, the partial identity on dom(e)."""
    return compose(dagger(e), e)


def final_idempotent(e: ArithElement) -> ArithElement:
    """ee‡, the partial identity on img(e)."""
    return compose(e, dagger(e))


def is_idempotent(e: ArithElement) -> bool:
    return isinstance(e, Zero) or e.dom == e.img


def meet(e1: ArithElement, e2: ArithElement) -> ArithElement:
    """Meet of two idempotents: Id_{c1} Id_{c2} = Id_{c1 ∩ c2}."""
    if not (is_idempotent(e1) and is_idempotent(e2)):
        raise DomainError("meet is only defined on idempotents")
    return compose(e1, e2)


def leq(e1: ArithElement, e2: ArithElement) -> bool:
    """Natural partial order: e1 is a restriction of e2."""
    return e1 == compose(e2, initial_idempotent(e1))


def compose_chain(pairs: Sequence[Tuple[int, int]]) -> NormalForm:
    """R_{a_n,b_n} ... R_{a_0,b_0} as a single generator R_{A,B}.

    ``pairs`` lists the factors left to right, so the last pair is the
    innermost (index 0). A is the product of the a_j and B reads the b_j as
    mixed-radix digits whose columns are labelled by the a_j.
    """
    modulus, residue, place = 1, 0, 1
    for a, b in reversed(pairs):
        generator(a, b)
        residue += b * place
        place *= a
        modulus *= a
    return generator(modulus, residue)


def factor_into_prime_generators(a: int, b: int) -> List[Tuple[int, int]]:
    """Write R_{a,b} as a product of prime-order generators R_{p,q}.

    Primes appear in nondecreasing order; the digits q_j are the mixed-radix
    digits of b, least significant in the last (innermost) column.
    """
    check_natural(a, "a")
    if a < 2:
        raise DomainError(f"a must be at least 2, got {a}")
    generator(a, b)

    primes = prime_factors(a)
    digits = []
    for p in reversed(primes):
        b, q = divmod(b, p)
        digits.append(q)
    digits.reverse()
    return list(zip(primes, digits))
