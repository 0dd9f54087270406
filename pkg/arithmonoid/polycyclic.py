"""Polycyclic monoids P_k, their normal forms, and their arithmetic images.

Elements of P_k are kept as pairs of words (v, u) standing for v‡u, and
compose by cancelling a matching suffix. theta_k sends (v, u) to
R‡_{k^len(v), num(v)} R_{k^len(u), num(u)} in the arithmetic monoid. The
k-bounded naturals encode a word as (length, numeric value), which turns
suffix matching into a congruence test.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .arith import ZERO, ArithElement, NormalForm, Zero
from .numtheory import FULL, CongruenceClass, DomainError, check_natural

_DIGIT_TOKEN = re.compile(r"\[(\d+)\]|(\d)")
EMPTY_WORD_TEXT = "ε"


def _check_alphabet(k: int) -> int:
    check_natural(k, "k")
    if k < 2:
        raise DomainError(f"alphabet size k must be at least 2, got {k}")
    return k


@dataclass(frozen=True)
class Word:
    """A finite word over {0..k-1}, most significant digit first."""

    k: int
    digits: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_alphabet(self.k)
        object.__setattr__(self, "digits", tuple(self.digits))
        for x in self.digits:
            check_natural(x, "digit")
            if x >= self.k:
                raise DomainError(f"digit {x} is not below k={self.k}")

    @classmethod
    def parse(cls, k: int, text: str) -> "Word":
        """Read digits like "0110", with "[11]" for digits above 9."""
        text = text.strip()
        if text in ("", EMPTY_WORD_TEXT):
            return cls(k)
        digits, pos = [], 0
        while pos < len(text):
            match = _DIGIT_TOKEN.match(text, pos)
            if match is None:
                raise DomainError(f"cannot read a digit at position {pos} of {text!r}")
            digits.append(int(match.group(1) or match.group(2)))
            pos = match.end()
        return cls(k, tuple(digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __add__(self, other: "Word") -> "Word":
        _same_alphabet(self.k, other.k)
        return Word(self.k, self.digits + other.digits)

    def endswith(self, suffix: "Word") -> bool:
        _same_alphabet(self.k, suffix.k)
        n = len(suffix)
        return n == 0 or self.digits[-n:] == suffix.digits

    def __str__(self) -> str:
        if not self.digits:
            return EMPTY_WORD_TEXT
        return "".join(str(x) if x < 10 else f"[{x}]" for x in self.digits)


def _same_alphabet(k1: int, k2: int) -> None:
    if k1 != k2:
        raise DomainError(f"alphabet mismatch: k={k1} and k={k2}")


def num(w: Word) -> int:
    """Numeric interpretation: w read as a base-k numeral."""
    value = 0
    for x in w.digits:
        value = w.k * value + x
    return value


@dataclass(frozen=True)
class PolyZero:
    """The zero of P_k, kept apart from the identity pair (ε, ε)."""

    def __repr__(self) -> str:
        return "POLY_ZERO"


@dataclass(frozen=True)
class PolyPair:
    """v‡u with up = v and down = u."""

    up: Word
    down: Word

    def __post_init__(self):
        _same_alphabet(self.up.k, self.down.k)

    @property
    def k(self) -> int:
        return self.up.k

    def __mul__(self, other: "PolyElement") -> "PolyElement":
        return poly_compose(self, other)

    def __str__(self) -> str:
        return f'("{self.up}","{self.down}")'


PolyElement = Union[PolyZero, PolyPair]

POLY_ZERO = PolyZero()


def poly_identity(k: int) -> PolyPair:
    return PolyPair(Word(k), Word(k))


def poly_generator(k: int, x: int) -> PolyPair:
    """The generator x, as the pair (ε, "x")."""
    return PolyPair(Word(k), Word(k, (x,)))


def poly_pair(k: int, up: str, down: str) -> PolyPair:
    return PolyPair(Word.parse(k, up), Word.parse(k, down))


def poly_dagger(e: PolyElement) -> PolyElement:
    if isinstance(e, PolyZero):
        return e
    return PolyPair(e.down, e.up)


def poly_compose(lhs: PolyElement, rhs: PolyElement) -> PolyElement:
    """(x, w)(v, u) by cancellation of a matching suffix.

    If w = rv the result is (x, ru); if v = sw it is (sx, u); otherwise zero.
    """
    if isinstance(lhs, PolyZero) or isinstance(rhs, PolyZero):
        return POLY_ZERO
    _same_alphabet(lhs.k, rhs.k)
    x, w = lhs.up, lhs.down
    v, u = rhs.up, rhs.down
    if w.endswith(v):
        r = Word(w.k, w.digits[: len(w) - len(v)])
        return PolyPair(x, r + u)
    if v.endswith(w):
        s = Word(v.k, v.digits[: len(v) - len(w)])
        return PolyPair(s + x, u)
    return POLY_ZERO


def theta(k: int, e: PolyElement) -> ArithElement:
    """theta_k(v‡u) = R‡_{k^len(v), num(v)} R_{k^len(u), num(u)}."""
    _check_alphabet(k)
    if isinstance(e, PolyZero):
        return ZERO
    _same_alphabet(k, e.k)
    return NormalForm(
        CongruenceClass(k ** len(e.down), num(e.down)),
        CongruenceClass(k ** len(e.up), num(e.up)),
    )


# k-bounded naturals


@dataclass(frozen=True)
class KBNIdentity:
    """The empty word, as a k-bounded natural."""

    def __repr__(self) -> str:
        return "KBN_IDENTITY"


@dataclass(frozen=True)
class KBNPair:
    """(m, n) with n < k^m: a word of length m >= 1 and value n."""

    k: int
    m: int
    n: int

    def __post_init__(self):
        _check_alphabet(self.k)
        check_natural(self.m, "m")
        check_natural(self.n, "n")
        if self.m == 0:
            raise DomainError("length 0 is the identity; use kbn() to build it")
        if self.n >= self.k ** self.m:
            raise DomainError(f"{self.n} is not below {self.k}^{self.m}")


KBNElement = Union[KBNIdentity, KBNPair]

KBN_IDENTITY = KBNIdentity()

# None stands for the zero of the KBN normal forms.
KBNNormalForm = Optional[Tuple[KBNElement, KBNElement]]


def kbn(k: int, m: int, n: int) -> KBNElement:
    """Build a k-bounded natural; length 0 gives the identity."""
    _check_alphabet(k)
    if m == 0:
        if n != 0:
            raise DomainError(f"{n} is not below {k}^0")
        return KBN_IDENTITY
    return KBNPair(k, m, n)


def _components(k: int, e: KBNElement) -> Tuple[int, int]:
    if isinstance(e, KBNIdentity):
        return 0, 0
    _same_alphabet(k, e.k)
    return e.m, e.n


def kbn_compose(k: int, lhs: KBNElement, rhs: KBNElement) -> KBNElement:
    """(d, c)(b, a) = (d + b, k^b c + a)."""
    d, c = _components(k, lhs)
    b, a = _components(k, rhs)
    return kbn(k, d + b, k ** b * c + a)


def mu(w: Word) -> KBNElement:
    """The isomorphism from words to k-bounded naturals: w -> (len, num)."""
    return kbn(w.k, len(w), num(w))


def mu_inverse(k: int, e: KBNElement) -> Word:
    m, n = _components(k, e)
    digits = []
    for _ in range(m):
        n, x = divmod(n, k)
        digits.append(x)
    return Word(k, tuple(reversed(digits)))


def k_residue(k: int, big: KBNElement, small: KBNElement) -> bool:
    """Is small a k-residue of big, i.e. the code of a suffix?"""
    b, a = _components(k, big)
    y, x = _components(k, small)
    return y <= b and a % k ** y == x


def kbn_cancel(k: int, big: KBNElement, small: KBNElement) -> KBNElement:
    """big \\ small: the code of r where big encodes r followed by small."""
    if not k_residue(k, big, small):
        raise DomainError(f"{small!r} is not a {k}-residue of {big!r}")
    b, a = _components(k, big)
    y, x = _components(k, small)
    if b == y:
        return KBN_IDENTITY
    return kbn(k, b - y, (a - x) // k ** y)


def kbn_star(k: int, lhs: KBNNormalForm, rhs: KBNNormalForm) -> KBNNormalForm:
    """Composition of P_k written entirely in k-bounded naturals."""
    if lhs is None or rhs is None:
        return None
    x, w = lhs
    v, u = rhs
    if k_residue(k, w, v):
        return x, kbn_compose(k, kbn_cancel(k, w, v), u)
    if k_residue(k, v, w):
        return kbn_compose(k, kbn_cancel(k, v, w), x), u
    return None


def _kbn_of_class(k: int, cls: CongruenceClass) -> KBNElement:
    """Recover (m, n) from k^m N + n; DomainError if the modulus is not a power of k."""
    modulus, m = cls.modulus, 0
    while modulus > 1:
        modulus, rest = divmod(modulus, k)
        if rest:
            raise DomainError(f"modulus {cls.modulus} is not a power of {k}")
        m += 1
    return kbn(k, m, cls.residue)


def _class_of_kbn(k: int, e: KBNElement) -> CongruenceClass:
    m, n = _components(k, e)
    return CongruenceClass(k ** m, n) if m else FULL


def poly_compose_arith(k: int, lhs: ArithElement, rhs: ArithElement) -> ArithElement:
    """Compose two elements of theta_k(P_k) through k-residues and cancellation."""
    _check_alphabet(k)
    if isinstance(lhs, Zero) or isinstance(rhs, Zero):
        return ZERO
    left = (_kbn_of_class(k, lhs.img), _kbn_of_class(k, lhs.dom))
    right = (_kbn_of_class(k, rhs.img), _kbn_of_class(k, rhs.dom))
    result = kbn_star(k, left, right)
    if result is None:
        return ZERO
    img, dom = result
    return NormalForm(_class_of_kbn(k, dom), _class_of_kbn(k, img))


def theta_inverse(k: int, e: ArithElement) -> PolyElement:
    """The pair (v, u) with theta_k(v‡u) = e; DomainError outside the image."""
    _check_alphabet(k)
    if isinstance(e, Zero):
        return POLY_ZERO
    return PolyPair(
        mu_inverse(k, _kbn_of_class(k, e.img)),
        mu_inverse(k, _kbn_of_class(k, e.dom)),
    )
