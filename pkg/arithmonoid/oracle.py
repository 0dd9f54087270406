"""Brute-force partial injections on a finite window {0..N}.

These graphs are the referee for every symbolic composition law: a symbolic
result is trusted only when it agrees with plain pointwise composition.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Mapping, Optional, Sequence

from .arith import ArithElement, NormalForm, Zero, apply, compose_all
from .config import config_value, get_config
from .numtheory import DomainError, check_natural

logger = logging.getLogger(__name__)


class InvariantViolation(RuntimeError):
    """A symbolic result disagreed with the brute-force oracle."""
    pass


@dataclass(frozen=True)
class FinitePartialInjection:
    """A partial injection with domain inside {0..window}.

    Images may lie above the window; composition and dagger cut them off.
    """

    window: int
    graph: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        check_natural(self.window, "window")
        seen = set()
        for n, y in self.graph.items():
            if not 0 <= n <= self.window:
                raise DomainError(f"domain point {n} is outside the window {{0..{self.window}}}")
            check_natural(y, "image")
            if y in seen:
                raise DomainError(f"two points map to {y}; graph is not injective")
            seen.add(y)
        object.__setattr__(self, "graph", dict(sorted(self.graph.items())))

    def __call__(self, n: int) -> Optional[int]:
        return self.graph.get(n)

    def __len__(self) -> int:
        return len(self.graph)


def oracle_identity(window: int) -> FinitePartialInjection:
    return FinitePartialInjection(window, {n: n for n in range(window + 1)})


def oracle_empty(window: int) -> FinitePartialInjection:
    return FinitePartialInjection(window, {})


def _default_window(window: Optional[int]) -> int:
    return config_value("window", window)


def from_arith(e: ArithElement, window: Optional[int] = None) -> FinitePartialInjection:
    """Graph of e on every domain point up to the window, images untruncated."""
    window = _default_window(window)
    if isinstance(e, Zero):
        return oracle_empty(window)
    graph = {}
    for n in range(e.dom.residue, window + 1, e.dom.modulus):
        graph[n] = apply(e, n)
    return FinitePartialInjection(window, graph)


def oracle_compose(f: FinitePartialInjection, g: FinitePartialInjection) -> FinitePartialInjection:
    """f after g, as plain composition of partial functions."""
    if f.window != g.window:
        raise DomainError(f"window mismatch: {f.window} != {g.window}")
    graph = {}
    for n, y in g.graph.items():
        if y > g.window:
            continue
        z = f.graph.get(y)
        if z is not None:
            graph[n] = z
    return FinitePartialInjection(f.window, graph)


def oracle_dagger(f: FinitePartialInjection) -> FinitePartialInjection:
    """Converse of f, restricted to the images inside the window."""
    return FinitePartialInjection(f.window, {y: n for n, y in f.graph.items() if y <= f.window})


def is_monotone(f: FinitePartialInjection) -> bool:
    images = list(f.graph.values())
    return all(x < y for x, y in zip(images, images[1:]))


def agree_on_core(f: FinitePartialInjection, g: FinitePartialInjection, margin: int) -> bool:
    """Do f and g agree on every core point that either maps into the core?

    The core is {0..N - margin}; points whose images fall outside it in both
    graphs are ignored, as they may have been lost to window truncation.
    """
    if f.window != g.window:
        raise DomainError(f"window mismatch: {f.window} != {g.window}")
    check_natural(margin, "margin")
    if margin >= f.window:
        raise DomainError(f"margin {margin} must be smaller than the window {f.window}")
    core = f.window - margin
    for n in range(core + 1):
        y1, y2 = f.graph.get(n), g.graph.get(n)
        in_core = (y1 is not None and y1 <= core) or (y2 is not None and y2 <= core)
        if in_core and y1 != y2:
            logger.debug("core disagreement at %d: %s != %s", n, y1, y2)
            return False
    return True


def max_modulus(elements: Iterable[ArithElement]) -> int:
    moduli = [1]
    for e in elements:
        if isinstance(e, NormalForm):
            moduli += [e.dom.modulus, e.img.modulus]
    return max(moduli)


def chain_margin(factors: Sequence[ArithElement], window: Optional[int] = None) -> int:
    """Margin that keeps every intermediate value of the chain in the window.

    ``factors`` are listed left to right and applied right to left. Each
    inner factor is bounded above by an affine map; the core is cut down
    until all inner images stay within {0..N}. The result is never smaller
    than margin_factor times the largest modulus.
    """
    window = _default_window(window)
    config = get_config()
    margin = config["margin_factor"] * max_modulus(factors)

    slope, offset = Fraction(1), Fraction(0)
    core = window
    for e in reversed(factors[1:]):
        if isinstance(e, Zero):
            break
        # e(n) <= (c/a) n + d on its domain
        slope *= Fraction(e.img.modulus, e.dom.modulus)
        offset = offset * Fraction(e.img.modulus, e.dom.modulus) + e.img.residue
        core = min(core, int((window - offset) / slope) if window >= offset else 0)

    margin = max(margin, window - core)
    return min(margin, window - 1) if window else 0


def pointwise_apply(factors: Sequence[ArithElement], n: int) -> Optional[int]:
    """Exact, unbounded evaluation of the chain at n."""
    for e in reversed(factors):
        if n is None:
            return None
        n = apply(e, n)
    return n


@dataclass
class OracleReport:
    window: int
    margin: int
    symbolic: ArithElement
    compared_points: int
    core_agrees: bool
    pointwise_mismatches: List[int]

    @property
    def ok(self) -> bool:
        return self.core_agrees and not self.pointwise_mismatches


def check_chain(
    factors: Sequence[ArithElement],
    window: Optional[int] = None,
    symbolic: Optional[ArithElement] = None,
    raise_on_failure: bool = True,
) -> OracleReport:
    """Compare the symbolic composite of a chain against both oracles.

    The window oracle folds oracle_compose over the factor graphs and must
    agree on the core; the pointwise oracle evaluates the chain exactly at
    every window point and must match apply on the composite everywhere.
    """
    window = _default_window(window)
    if window < 1:
        raise DomainError(f"oracle window must be positive, got {window}")
    if symbolic is None:
        symbolic = compose_all(factors)
    margin = chain_margin(factors, window)

    graphs = [from_arith(e, window) for e in factors]
    folded = oracle_identity(window)
    for graph in graphs:
        folded = oracle_compose(folded, graph)
    symbolic_graph = from_arith(symbolic, window)
    core_agrees = agree_on_core(symbolic_graph, folded, margin)

    mismatches = [
        n for n in range(window + 1) if pointwise_apply(factors, n) != apply(symbolic, n)
    ]
    report = OracleReport(
        window=window,
        margin=margin,
        symbolic=symbolic,
        compared_points=window - margin + 1,
        core_agrees=core_agrees,
        pointwise_mismatches=mismatches,
    )
    logger.debug(
        "oracle check: %d factors, window %d, margin %d, ok=%s",
        len(factors), window, margin, report.ok,
    )
    if raise_on_failure and not report.ok:
        first = mismatches[0] if mismatches else None
        raise InvariantViolation(
            f"symbolic composite {symbolic!r} disagrees with the oracle "
            f"(core agrees: {core_agrees}, first pointwise mismatch: {first})"
        )
    return report
