"""p-adic order, norm and distance on N, read through polycyclic generators.

The norm of n is recovered as the least defined value of theta_p(0^k)(n)
divided by n. Replacing the chain of zero words by the prefixes of an
arbitrary Cantor point gives eval_gamma.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from .arith import apply, generator
from .config import config_value
from .numtheory import DomainError, check_natural, check_positive, check_prime

logger = logging.getLogger(__name__)

DIGIT_ORDERS = ("msb", "lsb")

# Exact rational; zero only for the input 0.
PAdicValue = Fraction


@dataclass(frozen=True)
class CantorPoint:
    """A one-sided infinite word over {0..p-1}.

    Digits come from ``head`` and then from ``tail`` (all zeros when no tail
    is given). A point with a custom tail must declare ``inspection_bound``,
    the number of digits eval_gamma may read.
    """

    p: int
    head: Tuple[int, ...] = ()
    tail: Optional[Callable[[int], int]] = None
    inspection_bound: Optional[int] = None
    digit_order: Optional[str] = None

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "head", tuple(self.head))
        for x in self.head:
            self._check_digit(x)
        if self.tail is not None and self.inspection_bound is None:
            raise DomainError("a Cantor point with a custom tail must declare an inspection bound")
        if self.inspection_bound is not None:
            check_natural(self.inspection_bound, "inspection_bound")

    def _check_digit(self, x: int) -> int:
        check_natural(x, "digit")
        if x >= self.p:
            raise DomainError(f"digit {x} is not below p={self.p}")
        return x

    @property
    def zero_from(self) -> Optional[int]:
        """Index from which every digit is known to be 0, if any."""
        return len(self.head) if self.tail is None else None

    def digit(self, i: int) -> int:
        check_natural(i, "i")
        if i < len(self.head):
            return self.head[i]
        if self.tail is None:
            return 0
        return self._check_digit(self.tail(i))

    def prefix(self, length: int) -> Tuple[int, ...]:
        return tuple(self.digit(i) for i in range(length))

    def __str__(self) -> str:
        shown = "".join(str(x) if x < 10 else f"[{x}]" for x in self.head)
        return f"{shown}0^ω" if self.tail is None else f"{shown}..."


def constant_zero(p: int) -> CantorPoint:
    return CantorPoint(p)


def from_word(p: int, digits: Sequence[int]) -> CantorPoint:
    """The finite word followed by zeros."""
    return CantorPoint(p, tuple(digits))


def from_stream(p: int, stream: Callable[[int], int], inspection_bound: int) -> CantorPoint:
    """A user-supplied deterministic digit stream, read at most ``inspection_bound`` times."""
    return CantorPoint(p, (), stream, inspection_bound)


def base_digits(p: int, a: int) -> List[int]:
    """Base-p digits of a >= 1, most significant first."""
    digits = []
    while a:
        a, x = divmod(a, p)
        digits.append(x)
    return digits[::-1]


def cant(p: int, a: int, digit_order: Optional[str] = None) -> CantorPoint:
    """The base-p digits of a followed by zeros.

    ``digit_order`` is "msb" (most significant digit first, the order num
    reads words in) or "lsb"; the configured default applies when omitted.
    """
    check_prime(p)
    check_positive(a, "a")
    digit_order = config_value("digit_order", digit_order)
    if digit_order not in DIGIT_ORDERS:
        raise DomainError(f"digit order must be one of {DIGIT_ORDERS}, got {digit_order!r}")
    digits = base_digits(p, a)
    if digit_order == "lsb":
        digits.reverse()
    return CantorPoint(p, tuple(digits), digit_order=digit_order)


def order(p: int, n: int) -> int:
    """ord_p(n): the largest k with p^k dividing n."""
    check_prime(p)
    check_natural(n, "n")
    if n == 0:
        raise DomainError("the p-order of 0 is undefined")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def norm(p: int, n: int) -> PAdicValue:
    """p^(-ord_p(n)), with the norm of 0 taken to be 0."""
    check_prime(p)
    if check_natural(n, "n") == 0:
        return Fraction(0)
    return Fraction(1, p ** order(p, n))


def distance(p: int, a: int, b: int) -> PAdicValue:
    check_natural(a, "a")
    check_natural(b, "b")
    return norm(p, abs(b - a))


def norm_via_polycyclic(p: int, n: int) -> PAdicValue:
    """min_k theta_p(0^k)(n) / n, with theta_p(0^k) = R_{p^k,0}."""
    check_prime(p)
    check_positive(n, "n")
    least, k = n, 0
    while True:
        value = apply(generator(p ** k, 0), n)
        if value is None:
            break
        least = min(least, value)
        k += 1
    return Fraction(least, n)


def gamma_prefix_values(gamma: CantorPoint, n: int) -> List[Tuple[int, Optional[int]]]:
    """theta_p(w)(n) for the prefixes w of gamma, in inspection order.

    Each entry is (len(w), value) with value None where theta_p(w) is
    undefined at n. Reading stops once p^len(w) > n and no longer prefix can
    be defined: the prefix value exceeds n, or it is 0 and only zeros
    follow. A declared inspection bound stops reading as well.
    """
    check_positive(n, "n")
    p = gamma.p
    values: List[Tuple[int, Optional[int]]] = [(0, n)]
    length, prefix_value, power = 0, 0, 1
    while True:
        if gamma.inspection_bound is not None and length >= gamma.inspection_bound:
            break
        if power > n:
            if prefix_value > n:
                break
            if prefix_value == 0 and gamma.zero_from is not None and length >= gamma.zero_from:
                break
        prefix_value = p * prefix_value + gamma.digit(length)
        length += 1
        power *= p
        if n >= prefix_value and (n - prefix_value) % power == 0:
            values.append((length, (n - prefix_value) // power))
        else:
            values.append((length, None))
    return values


def eval_gamma(gamma: CantorPoint, n: int) -> PAdicValue:
    """Least theta_p(w)(n) / n over the prefixes w of gamma (the empty prefix gives 1)."""
    defined = [value for _, value in gamma_prefix_values(gamma, n) if value is not None]
    return Fraction(min(defined), n)


def norm_table(p: int, n_max: int) -> pd.DataFrame:
    """The norm of 1..n_max as exact numerator/denominator columns."""
    check_prime(p)
    check_natural(n_max, "n_max")
    rows = []
    for n in range(1, n_max + 1):
        value = norm(p, n)
        rows.append({"n": n, "norm-numerator": value.numerator, "norm-denominator": value.denominator})
    return pd.DataFrame(rows, columns=["n", "norm-numerator", "norm-denominator"])


def audit_cantor_corollary(
    primes: Optional[Iterable[int]] = None,
    a_max: Optional[int] = None,
    n_max: Optional[int] = None,
    digit_orders: Sequence[str] = DIGIT_ORDERS,
) -> pd.DataFrame:
    """Compare eval_{cant(a)}(n) with the distance |n - a|_p over a grid.

    One row per (p, a, n, digit order) with a < n; ``holds`` records whether
    the two agree. Nothing is asserted: the table is the report.
    """
    audit = config_value("audit")
    primes = list(audit["primes"] if primes is None else primes)
    a_max = audit["a_max"] if a_max is None else a_max
    n_max = audit["n_max"] if n_max is None else n_max

    rows = []
    for p in primes:
        for digit_order in digit_orders:
            for a in range(1, a_max + 1):
                gamma = cant(p, a, digit_order)
                for n in range(a + 1, n_max + 1):
                    value = eval_gamma(gamma, n)
                    dist = distance(p, n, a)
                    rows.append({
                        "p": p,
                        "digit_order": digit_order,
                        "a": a,
                        "n": n,
                        "eval": str(value),
                        "distance": str(dist),
                        "holds": value == dist,
                    })
        logger.debug("audited p=%d over a<=%d, n<=%d", p, a_max, n_max)
    return pd.DataFrame(rows, columns=["p", "digit_order", "a", "n", "eval", "distance", "holds"])


def summarize_audit(report: pd.DataFrame) -> pd.DataFrame:
    """Holds/fails counts per (p, digit order), with the first counterexample."""
    rows = []
    for (p, digit_order), group in report.groupby(["p", "digit_order"], sort=True):
        failures = group[~group["holds"]]
        first = None
        if not failures.empty:
            row = failures.iloc[0]
            first = f"a={row['a']}, n={row['n']}: eval={row['eval']}, distance={row['distance']}"
        rows.append({
            "p": p,
            "digit_order": digit_order,
            "holds": int(group["holds"].sum()),
            "fails": int(len(failures)),
            "first_counterexample": first,
        })
    return pd.DataFrame(rows, columns=["p", "digit_order", "holds", "fails", "first_counterexample"])
