"""Exact graph parameters with optimal witnesses.

Six quantities are computed exactly: the independence number alpha, the
irregular independence number alpha_ir (independent sets whose member degrees
are pairwise distinct), the regular independence number alpha_reg (independent
sets whose members share one degree), the irregular domination number gamma_ir
(dominating sets D such that the counts |N(v) cap D| are pairwise distinct
over v outside D), its regular counterpart gamma_reg (all counts equal), and
the maximum cut beta.

Every solver returns an Extremum: the optimal value together with a witness
set attaining it.  Among optimal sets the witness is always the one with the
numerically smallest vertex bitmask, which for fixed size is the
lexicographically smallest sorted member tuple.  The naive_* oracles realize
the same tie-break by scanning all 2^n subsets in ascending mask order and
updating only on strict improvement; the optimized solvers match them bit for
bit, which the test suite checks exhaustively on small orders.

Everything here enumerates subsets, so the intended range is small n.  The
solvers whose cost is a hard 2^n (gamma_ir, gamma_reg, max_cut) refuse n > 26
unless the caller raises the guard explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple, Optional

from irregraph.graph import Graph, VertexSet, classify_degrees

SIZE_GUARD = 26


class Extremum(NamedTuple):
    value: int
    witness: VertexSet


def _subset_masks_of_size(n: int, k: int):
    """All k-subsets of [0, n) in increasing numeric mask order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        # Gosper's hack: next larger integer with the same popcount.
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def _check_subset(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise ValueError("vertex set is sized for a different graph")


# -- predicates -------------------------------------------------------------


def _independent_mask(rows, mask: int) -> bool:
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if rows[v] & mask:
            return False
        rest &= rest - 1
    return True


def _degrees_distinct(degs, mask: int) -> bool:
    seen = 0
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        bit = 1 << degs[v]
        if seen & bit:
            return False
        seen |= bit
        rest &= rest - 1
    return True


def _degrees_equal(degs, mask: int) -> bool:
    rest = mask
    first = -1
    while rest:
        v = (rest & -rest).bit_length() - 1
        if first < 0:
            first = degs[v]
        elif degs[v] != first:
            return False
        rest &= rest - 1
    return True


def _domination_counts_ok(
    rows, n: int, mask: int, distinct: bool
) -> bool:
    """Domination plus the count condition on vertices outside the set.

    distinct=True asks for pairwise distinct counts |N(v) cap D|, False for
    all counts equal.  Either way a zero count fails (undominated vertex).
    """
    outside = ((1 << n) - 1) ^ mask
    seen = 0
    first = -1
    rest = outside
    while rest:
        v = (rest & -rest).bit_length() - 1
        c = (rows[v] & mask).bit_count()
        if c == 0:
            return False
        if distinct:
            bit = 1 << c
            if seen & bit:
                return False
            seen |= bit
        else:
            if first < 0:
                first = c
            elif c != first:
                return False
        rest &= rest - 1
    return True


def is_independent(g: Graph, a: VertexSet) -> bool:
    _check_subset(g, a)
    return _independent_mask(g.rows, a.mask)


def is_irregular_independent(g: Graph, a: VertexSet) -> bool:
    """Independent with pairwise distinct degrees in g."""
    _check_subset(g, a)
    degs = g.degrees()
    return _independent_mask(g.rows, a.mask) and _degrees_distinct(degs, a.mask)


def is_regular_independent(g: Graph, a: VertexSet) -> bool:
    """Independent with all member degrees equal."""
    _check_subset(g, a)
    return _independent_mask(g.rows, a.mask) and _degrees_equal(
        g.degrees(), a.mask
    )


def is_dominating(g: Graph, d: VertexSet) -> bool:
    _check_subset(g, d)
    rows, n, mask = g.rows, g.n, d.mask
    outside = ((1 << n) - 1) ^ mask
    rest = outside
    while rest:
        v = (rest & -rest).bit_length() - 1
        if not rows[v] & mask:
            return False
        rest &= rest - 1
    return True


def is_irregular_dominating(g: Graph, d: VertexSet) -> bool:
    """Dominating with pairwise distinct counts |N(v) cap D| outside D."""
    _check_subset(g, d)
    return _domination_counts_ok(g.rows, g.n, d.mask, distinct=True)


def is_regular_dominating(g: Graph, d: VertexSet) -> bool:
    """Dominating with all counts |N(v) cap D| equal outside D."""
    _check_subset(g, d)
    return _domination_counts_ok(g.rows, g.n, d.mask, distinct=False)


# -- naive oracles ------------------------------------------------------------

# Each oracle scans every subset mask in ascending order.  They exist as the
# ground truth the optimized solvers are validated against and stay dumb on
# purpose; do not optimize them.


def _naive_max(g: Graph, valid: Callable[[int], bool]) -> Extremum:
    best_size, best_mask = -1, 0
    for mask in range(1 << g.n):
        if valid(mask):
            size = mask.bit_count()
            if size > best_size:
                best_size, best_mask = size, mask
    return Extremum(best_size, VertexSet(g.n, best_mask))


def _naive_min(g: Graph, valid: Callable[[int], bool]) -> Extremum:
    best_size, best_mask = g.n + 1, 0
    for mask in range(1 << g.n):
        if valid(mask):
            size = mask.bit_count()
            if size < best_size:
                best_size, best_mask = size, mask
    if best_size > g.n:
        raise ValueError("no valid set exists")
    return Extremum(best_size, VertexSet(g.n, best_mask))


def naive_alpha(g: Graph) -> Extremum:
    rows = g.rows
    return _naive_max(g, lambda mask: _independent_mask(rows, mask))


def naive_alpha_ir(g: Graph) -> Extremum:
    rows, degs = g.rows, g.degrees()
    return _naive_max(
        g,
        lambda mask: _independent_mask(rows, mask)
        and _degrees_distinct(degs, mask),
    )


def naive_alpha_reg(g: Graph) -> Extremum:
    rows, degs = g.rows, g.degrees()
    return _naive_max(
        g,
        lambda mask: _independent_mask(rows, mask)
        and _degrees_equal(degs, mask),
    )


def naive_gamma_ir(g: Graph) -> Extremum:
    rows, n = g.rows, g.n
    return _naive_min(
        g, lambda mask: _domination_counts_ok(rows, n, mask, distinct=True)
    )


def naive_gamma_reg(g: Graph) -> Extremum:
    rows, n = g.rows, g.n
    return _naive_min(
        g, lambda mask: _domination_counts_ok(rows, n, mask, distinct=False)
    )


def naive_max_cut(g: Graph) -> Extremum:
    rows, n = g.rows, g.n
    best_cut, best_mask = -1, 0
    for mask in range(1 << n):
        out = ((1 << n) - 1) ^ mask
        cut = 0
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            cut += (rows[v] & out).bit_count()
            rest &= rest - 1
        if cut > best_cut:
            best_cut, best_mask = cut, mask
    return Extremum(best_cut, VertexSet(n, best_mask))


# -- optimized solvers ---------------------------------------------------------


def _require_small(g: Graph, what: str, guard: int) -> None:
    if g.n > guard:
        raise ValueError(
            f"{what} enumerates 2^n subsets; n={g.n} exceeds the guard "
            f"({guard}); pass size_guard explicitly to override"
        )


def _alpha_value(rows, candidates: int) -> int:
    """Branch and bound maximum independent set size within a candidate mask."""
    best = 0

    def grow(cand: int, count: int) -> None:
        nonlocal best
        if count + cand.bit_count() <= best:
            return
        if not cand:
            best = count
            return
        low = cand & -cand
        v = low.bit_length() - 1
        grow(cand & ~(rows[v] | low), count + 1)
        grow(cand ^ low, count)

    grow(candidates, 0)
    return best


def _witness_of_size(g: Graph, k: int, valid: Callable[[int], bool]) -> VertexSet:
    for mask in _subset_masks_of_size(g.n, k):
        if valid(mask):
            return VertexSet(g.n, mask)
    raise AssertionError("solver value has no witness; solver bug")


def alpha(g: Graph) -> Extremum:
    """Independence number with the smallest-mask maximum independent set."""
    if g.n < 1:
        raise ValueError("parameters need at least one vertex")
    rows = g.rows
    value = _alpha_value(rows, (1 << g.n) - 1)
    return Extremum(
        value, _witness_of_size(g, value, lambda m: _independent_mask(rows, m))
    )


def alpha_ir(g: Graph) -> Extremum:
    """Irregular independence number.

    Any irregular independent set picks at most one vertex per degree class,
    so the search branches over classes instead of vertices, in decreasing
    class-degree order, pruning a branch when even taking one vertex from
    every remaining class cannot beat the incumbent.
    """
    if g.n < 1:
        raise ValueError("parameters need at least one vertex")
    rows, degs = g.rows, g.degrees()
    dc = classify_degrees(g)
    class_masks = [dc.classes[d].mask for d in reversed(dc.distinct)]
    nclasses = len(class_masks)
    best = 0

    def grow(i: int, chosen: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if i == nclasses or count + (nclasses - i) <= best:
            return
        rest = class_masks[i]
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if not rows[v] & chosen:
                grow(i + 1, chosen | low, count + 1)
            rest &= rest - 1
        grow(i + 1, chosen, count)

    grow(0, 0, 0)
    witness = _witness_of_size(
        g,
        best,
        lambda m: _independent_mask(rows, m) and _degrees_distinct(degs, m),
    )
    return Extremum(best, witness)


def alpha_reg(g: Graph) -> Extremum:
    """Regular independence number: the best degree class taken alone."""
    if g.n < 1:
        raise ValueError("parameters need at least one vertex")
    rows, degs = g.rows, g.degrees()
    dc = classify_degrees(g)
    best = max(
        _alpha_value(rows, dc.classes[d].mask) for d in dc.distinct
    )
    witness = _witness_of_size(
        g,
        best,
        lambda m: _independent_mask(rows, m) and _degrees_equal(degs, m),
    )
    return Extremum(best, witness)


def gamma_ir(g: Graph, size_guard: int = SIZE_GUARD) -> Extremum:
    """Irregular domination number.

    Candidate sizes run upward from max(ceil(n/2), n - Delta), which is a
    proven lower bound, so the first size admitting a valid set is optimal.
    The full vertex set is vacuously valid, so the search always terminates.
    """
    if g.n < 1:
        raise ValueError("parameters need at least one vertex")
    _require_small(g, "gamma_ir", size_guard)
    rows, n = g.rows, g.n
    dc = classify_degrees(g)
    start = max((n + 1) // 2, n - dc.Delta)
    for k in range(start, n + 1):
        for mask in _subset_masks_of_size(n, k):
            if _domination_counts_ok(rows, n, mask, distinct=True):
                return Extremum(k, VertexSet(n, mask))
    raise AssertionError("V(G) must be irregular dominating; solver bug")


def gamma_reg(g: Graph, size_guard: int = SIZE_GUARD) -> Extremum:
    """Regular (fair) domination number, sizes tried upward from 1."""
    if g.n < 1:
        raise ValueError("parameters need at least one vertex")
    _require_small(g, "gamma_reg", size_guard)
    rows, n = g.rows, g.n
    for k in range(1, n + 1):
        for mask in _subset_masks_of_size(n, k):
            if _domination_counts_ok(rows, n, mask, distinct=False):
                return Extremum(k, VertexSet(n, mask))
    raise AssertionError("V(G) must be regular dominating; solver bug")


def max_cut(g: Graph, size_guard: int = SIZE_GUARD) -> Extremum:
    """Maximum cut over 2^(n-1) sides.

    Only sides avoiding the last vertex are enumerated: each bipartition has
    exactly one such side, and it is the numerically smaller of the pair, so
    the ascending scan still lands on the smallest-mask witness overall.
    """
    if g.n < 1:
        raise ValueError("parameters need at least one vertex")
    _require_small(g, "max_cut", size_guard)
    rows, n = g.rows, g.n
    full = (1 << n) - 1
    best_cut, best_mask = -1, 0
    for mask in range(1 << (n - 1)):
        out = full ^ mask
        cut = 0
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            cut += (rows[v] & out).bit_count()
            rest &= rest - 1
        if cut > best_cut:
            best_cut, best_mask = cut, mask
    return Extremum(best_cut, VertexSet(n, best_mask))


# -- combined report ------------------------------------------------------------


@dataclass(frozen=True)
class ParameterReport:
    """All exact parameters of one graph, with one witness per parameter."""

    n: int
    m: int
    alpha: int
    alpha_ir: int
    alpha_reg: int
    gamma_ir: int
    gamma_reg: int
    beta: int
    delta: int
    Delta: int
    span: int
    avg_degree: Fraction
    witnesses: dict[str, VertexSet] = field(compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if not 1 <= self.alpha_ir <= self.alpha <= n:
            raise AssertionError("alpha chain violated")
        if not 1 <= self.alpha_reg <= self.alpha:
            raise AssertionError("alpha_reg out of range")
        if not (n + 1) // 2 <= self.gamma_ir <= n:
            raise AssertionError("gamma_ir out of range")
        if not self.beta <= self.m:
            raise AssertionError("beta exceeds edge count")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "alpha_ir": self.alpha_ir,
            "alpha_reg": self.alpha_reg,
            "gamma_ir": self.gamma_ir,
            "gamma_reg": self.gamma_reg,
            "beta": self.beta,
            "delta": self.delta,
            "Delta": self.Delta,
            "span": self.span,
            "avg_degree": [
                self.avg_degree.numerator,
                self.avg_degree.denominator,
            ],
            "witnesses": {
                key: list(ws.members) for key, ws in self.witnesses.items()
            },
        }


_WITNESS_CHECKS = {
    "alpha": is_independent,
    "alpha_ir": is_irregular_independent,
    "alpha_reg": is_regular_independent,
    "gamma_ir": is_irregular_dominating,
    "gamma_reg": is_regular_dominating,
}


def full_report(g: Graph, size_guard: int = SIZE_GUARD) -> ParameterReport:
    """Compute every parameter exactly and re-validate each witness."""
    if g.n < 1:
        raise ValueError("parameters need at least one vertex")
    dc = classify_degrees(g)
    results = {
        "alpha": alpha(g),
        "alpha_ir": alpha_ir(g),
        "alpha_reg": alpha_reg(g),
        "gamma_ir": gamma_ir(g, size_guard),
        "gamma_reg": gamma_reg(g, size_guard),
        "beta": max_cut(g, size_guard),
    }
    for key, ext in results.items():
        check = _WITNESS_CHECKS.get(key)
        if check is not None and not check(g, ext.witness):
            raise AssertionError(f"invalid witness for {key}")
        if check is not None and ext.witness.size != ext.value:
            raise AssertionError(f"witness size mismatch for {key}")
    return ParameterReport(
        n=g.n,
        m=g.m,
        alpha=results["alpha"].value,
        alpha_ir=results["alpha_ir"].value,
        alpha_reg=results["alpha_reg"].value,
        gamma_ir=results["gamma_ir"].value,
        gamma_reg=results["gamma_reg"].value,
        beta=results["beta"].value,
        delta=dc.delta,
        Delta=dc.Delta,
        span=dc.span,
        avg_degree=Fraction(2 * g.m, g.n),
        witnesses={key: ext.witness for key, ext in results.items()},
    )
