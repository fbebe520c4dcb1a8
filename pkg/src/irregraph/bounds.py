"""Closed-form bounds on the irregular parameters.

Each function evaluates one published inequality from graph statistics alone;
nothing here enumerates subsets.  Integer-valued bounds (floors, ceilings,
maxima of integers) are computed in exact integer arithmetic.  Bounds whose
formula contains a radical return an unrounded float, and comparisons against
them use RADICAL_TOL so that sharp cases, where the radical collapses to an
integer, are not misclassified by floating-point noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from irregraph.graph import Graph, classify_degrees
from irregraph.params import max_cut

RADICAL_TOL = 1e-9


def within_tol(a: float, b: float, tol: float = RADICAL_TOL) -> bool:
    """Equality up to the radical tolerance."""
    return abs(a - b) <= tol


def le_with_tol(a: float, b: float, tol: float = RADICAL_TOL) -> bool:
    """a <= b with slack for radical rounding."""
    return a <= b + tol


@dataclass(frozen=True)
class BoundInputs:
    """Graph statistics the bound formulas consume."""

    n: int
    m: int
    delta: int
    Delta: int
    beta: int
    span: int
    avg_degree: Fraction

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("bounds need at least one vertex")
        if not 0 <= self.delta <= self.Delta <= self.n - 1:
            raise ValueError("degree extremes out of range")
        if not 0 <= self.beta <= self.m <= self.n * (self.n - 1) // 2:
            raise ValueError("edge statistics out of range")
        if self.avg_degree != Fraction(2 * self.m, self.n):
            raise ValueError("avg_degree inconsistent with n and m")

    @classmethod
    def from_graph(cls, g: Graph) -> "BoundInputs":
        dc = classify_degrees(g)
        return cls(
            n=g.n,
            m=g.m,
            delta=dc.delta,
            Delta=dc.Delta,
            beta=max_cut(g).value,
            span=dc.span,
            avg_degree=Fraction(2 * g.m, g.n),
        )


class RamseyTable:
    """Known diagonal Ramsey numbers R(k,k); lookups outside the table fail."""

    _KNOWN = {1: 1, 2: 2, 3: 6, 4: 18}

    def __getitem__(self, k: int) -> int:
        if k not in self._KNOWN:
            raise KeyError(f"R({k},{k}) is not in the table of known values")
        return self._KNOWN[k]

    def __contains__(self, k: int) -> bool:
        return k in self._KNOWN

    @property
    def known_k(self) -> tuple[int, ...]:
        return tuple(sorted(self._KNOWN))


DEFAULT_RAMSEY = RamseyTable()


def ub_alpha_ir_thm21(inp: BoundInputs) -> float:
    """min of Delta - delta + 1, floor((n - delta + 1)/2), and the radical
    (1 + sqrt(2n^2 - 2n - 4m + 1))/2."""
    n, m = inp.n, inp.m
    spread = inp.Delta - inp.delta + 1
    half = (n - inp.delta + 1) // 2
    radicand = 2 * n * n - 2 * n - 4 * m + 1
    radical = (1.0 + math.sqrt(radicand)) / 2.0
    return min(spread, half, radical)


def ub_alpha_ir_eq1(inp: BoundInputs) -> float:
    """(-2 delta + 1 + sqrt((2 delta - 1)^2 + 8m)) / 2."""
    d = inp.delta
    return (-2 * d + 1 + math.sqrt((2 * d - 1) ** 2 + 8 * inp.m)) / 2.0


def ub_alpha_ir_thm22(inp: BoundInputs) -> float:
    """Same formula with the maximum cut in place of the edge count."""
    d = inp.delta
    return (-2 * d + 1 + math.sqrt((2 * d - 1) ** 2 + 8 * inp.beta)) / 2.0


def ub_span_thm32(delta: int) -> float:
    """(1 + sqrt(1 + 8 delta)) / 2; valid whenever alpha_ir = 1."""
    if delta < 0:
        raise ValueError("minimum degree cannot be negative")
    return (1.0 + math.sqrt(1 + 8 * delta)) / 2.0


def lb_gamma_ir_thm41(n: int, Delta: int) -> int:
    """max(ceil(n/2), n - Delta), in exact integers."""
    if n < 1 or not 0 <= Delta <= n - 1:
        raise ValueError("need n >= 1 and 0 <= Delta <= n-1")
    return max((n + 1) // 2, n - Delta)


def lb_gamma_ir_thm42(n: int, beta: int) -> float:
    """n + (1 - sqrt(1 + 8 beta)) / 2."""
    if n < 1 or beta < 0:
        raise ValueError("need n >= 1 and beta >= 0")
    return n + (1.0 - math.sqrt(1 + 8 * beta)) / 2.0


def lb_gamma_ir_cor43(n: int, avg_degree: Fraction) -> float:
    """n - sqrt(d n); the radicand d*n equals 2m exactly."""
    if n < 1 or avg_degree < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return n - math.sqrt(avg_degree * n)


def ub_gamma_ir_thm45(
    n: int,
    span: int,
    delta: int,
    ramsey: RamseyTable = DEFAULT_RAMSEY,
) -> Optional[int]:
    """Best applicable upper bound n - k; None when no rule fires.

    Rule (i): span >= R(k,k) and delta >= k give n - k, for each tabulated k.
    Rule (ii): span >= 5 and delta >= 3 give n - 3 independently of (i).
    """
    candidates = [
        n - k for k in ramsey.known_k if span >= ramsey[k] and delta >= k
    ]
    if span >= 5 and delta >= 3:
        candidates.append(n - 3)
    return min(candidates) if candidates else None
