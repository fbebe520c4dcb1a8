"""Membership tests for the characterized graph classes.

Three kinds of recognition live here.  First, exact planarity and
outerplanarity at small scale: a graph is planar iff it contains no
subdivision of K_5 or of K_{3,3} as a subgraph, which an exhaustive
branch-vertex and disjoint-path search decides directly, and a graph is
outerplanar iff joining one universal vertex to it leaves it planar.  Second,
the degree-structure condition equivalent to alpha_ir = 1: vertices of
distinct degrees are pairwise adjacent and every degree class induces a
regular subgraph of the forced degree.  Third, structural classifiers mapping
a graph to the family it belongs to in the characterizations of planar
alpha_ir = 1 graphs, outerplanar alpha_ir = 1 graphs, and graphs with
gamma_ir in {n, n-1}.

The classifiers match by degree counts and local structure, never by
isomorphism search, and each matcher is exact: it fires only on graphs
isomorphic to its family member.  Families overlap (C_4 is both a cycle and
K_{2,2}), so classifiers report the first match in a fixed precedence order;
callers comparing against parameter values should test None versus not-None
rather than specific tags.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from irregraph.graph import Graph, classify_degrees, complete_graph, join

PLANARITY_BUDGET = 16
OUTERPLANARITY_BUDGET = PLANARITY_BUDGET - 1


# -- planarity by forbidden subdivisions --------------------------------------


def _paths_embed(rows, branch_mask: int, pairs) -> bool:
    """Internally disjoint paths realizing all pairs, avoiding branch vertices.

    Each pair (u, v) needs a path whose internal vertices are drawn from the
    shared free pool; a direct edge counts.  Classic backtracking: route the
    pairs one at a time, trying shorter paths first only in the sense that the
    direct hop is attempted before any extension.
    """

    def connect(i: int, used: int) -> bool:
        if i == len(pairs):
            return True
        u, v = pairs[i]
        vbit = 1 << v

        def extend(cur: int, taken: int) -> bool:
            if rows[cur] & vbit and connect(i + 1, used | taken):
                return True
            cand = rows[cur] & ~(branch_mask | used | taken)
            while cand:
                low = cand & -cand
                if extend(low.bit_length() - 1, taken | low):
                    return True
                cand &= cand - 1
            return False

        return extend(u, 0)

    return connect(0, 0)


def _has_complete_subdivision(g: Graph, k: int) -> bool:
    """Subdivision of K_k present?  Branch vertices need degree >= k-1."""
    rows = g.rows
    cands = [v for v in range(g.n) if rows[v].bit_count() >= k - 1]
    for combo in combinations(cands, k):
        branch_mask = 0
        for v in combo:
            branch_mask |= 1 << v
        pairs = [(u, v) for i, u in enumerate(combo) for v in combo[i + 1 :]]
        if _paths_embed(rows, branch_mask, pairs):
            return True
    return False


def _has_bipartite_subdivision(g: Graph, a: int, b: int) -> bool:
    """Subdivision of K_{a,b} with a == b; the first pick is pinned to one
    side to kill the side-swap symmetry (invalid for unequal sides)."""
    if a != b:
        raise ValueError("side pinning assumes equal part sizes")
    rows = g.rows
    cands = [v for v in range(g.n) if rows[v].bit_count() >= a]
    for chosen in combinations(cands, a + b):
        first, rest = chosen[0], chosen[1:]
        for others in combinations(rest, a - 1):
            side_a = (first,) + others
            side_b = tuple(v for v in rest if v not in others)
            branch_mask = 0
            for v in chosen:
                branch_mask |= 1 << v
            pairs = [(u, v) for u in side_a for v in side_b]
            if _paths_embed(rows, branch_mask, pairs):
                return True
    return False


def is_planar(g: Graph) -> bool:
    """Exact planarity for n <= 16.

    Density prescreen first (planar graphs on n >= 3 vertices have at most
    3n - 6 edges), then the subdivision search for the two minimal
    obstructions.
    """
    if g.n > PLANARITY_BUDGET:
        raise ValueError(f"planarity search is budgeted to n <= {PLANARITY_BUDGET}")
    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    return not (
        _has_complete_subdivision(g, 5) or _has_bipartite_subdivision(g, 3, 3)
    )


def is_outerplanar(g: Graph) -> bool:
    """True iff adding one universal vertex keeps the graph planar."""
    if g.n > OUTERPLANARITY_BUDGET:
        raise ValueError(
            f"outerplanarity search is budgeted to n <= {OUTERPLANARITY_BUDGET}"
        )
    return is_planar(join(complete_graph(1), g))


# -- the alpha_ir = 1 degree structure ----------------------------------------


def satisfies_lemma31(g: Graph) -> bool:
    """Degree structure equivalent to alpha_ir = 1.

    Condition (i): any two vertices of distinct degrees are adjacent, so the
    degree classes are pairwise completely joined.  Condition (ii): the
    subgraph induced by the class of degree k is (k + n_k - n)-regular, n_k
    being the class size.  (i) forces every independent set into a single
    class, hence alpha_ir <= 1, and (i) also implies (ii) by counting; both
    are still checked literally.
    """
    if g.n < 1:
        raise ValueError("needs at least one vertex")
    rows, degs, n = g.rows, g.degrees(), g.n
    for v in range(n):
        for u in range(v):
            if degs[u] != degs[v] and not rows[v] >> u & 1:
                return False
    dc = classify_degrees(g)
    for k in dc.distinct:
        class_mask = dc.classes[k].mask
        want = k + dc.sizes[k] - n
        rest = class_mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            if (rows[v] & class_mask).bit_count() != want:
                return False
            rest &= rest - 1
    return True


# -- family classifiers ---------------------------------------------------------


class Family(Enum):
    REGULAR_PLANAR = "RegularPlanar"
    STAR = "Star"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    K2_PLUS_EMPTY = "K2PlusEmpty"
    K2_PLUS_MATCHING = "K2PlusMatching"
    E2_PLUS_MATCHING = "E2PlusMatching"
    E2_PLUS_CYCLE = "E2PlusCycle"
    WINDMILL = "Windmill"
    K1_PLUS_CYCLE_UNION = "K1PlusCycleUnion"
    CYCLE_UNION = "CycleUnion"
    EMPTY = "Empty"
    PERFECT_MATCHING = "PerfectMatching"
    K22 = "K22"
    K2_PLUS_E2 = "K2PlusE2"
    ISOLATED_PLUS_STAR = "IsolatedPlusStar"
    ISOLATED_PLUS_REGULAR = "IsolatedPlusRegular"


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    params: dict = field(default_factory=dict)


def _class_pair_nonadjacent(g: Graph, degs, d: int) -> bool:
    """The two vertices of degree d exist and are not adjacent."""
    pair = [v for v in range(g.n) if degs[v] == d]
    return len(pair) == 2 and not g.has_edge(pair[0], pair[1])


def _connected_within(rows, mask: int) -> bool:
    if mask == 0:
        return True
    reach = mask & -mask
    while True:
        grown = reach
        rest = reach
        while rest:
            v = (rest & -rest).bit_length() - 1
            grown |= rows[v] & mask
            rest &= rest - 1
        if grown == reach:
            return reach == mask
        reach = grown


def classify_planar_alpha1(g: Graph) -> Optional[FamilyTag]:
    """The planar alpha_ir = 1 family containing g, or None.

    Matches, in precedence order: regular planar graphs, the star K_{1,n-1},
    K_{2,n-2}, K_2 + E_{n-2}, K_2 + perfect matching, E_2 + perfect matching,
    E_2 + C_{n-2}, the triangle windmill, and K_1 + (disjoint cycles).  The
    degree-structure gate runs first, so anything with alpha_ir > 1 is None
    without any matching work; planarity itself is only ever tested in the
    regular branch, every other matcher being exact for a family whose
    members are all planar.
    """
    if not satisfies_lemma31(g):
        return None
    n, degs = g.n, g.degrees()
    counts = Counter(degs)
    if len(counts) == 1:
        if is_planar(g):
            return FamilyTag(Family.REGULAR_PLANAR, {"n": n, "r": degs[0]})
        return None
    if counts.get(n - 1, 0) == 1 and counts.get(1, 0) == n - 1:
        return FamilyTag(Family.STAR, {"n": n})
    if (
        n >= 5
        and counts.get(n - 2, 0) == 2
        and counts.get(2, 0) == n - 2
        and _class_pair_nonadjacent(g, degs, n - 2)
    ):
        return FamilyTag(Family.COMPLETE_BIPARTITE, {"n": n})
    if n >= 4 and counts.get(n - 1, 0) == 2 and counts.get(2, 0) == n - 2:
        return FamilyTag(Family.K2_PLUS_EMPTY, {"n": n})
    if (
        n >= 6
        and n % 2 == 0
        and counts.get(n - 1, 0) == 2
        and counts.get(3, 0) == n - 2
    ):
        return FamilyTag(Family.K2_PLUS_MATCHING, {"n": n})
    if (
        n >= 6
        and n % 2 == 0
        and counts.get(n - 2, 0) == 2
        and counts.get(3, 0) == n - 2
        and _class_pair_nonadjacent(g, degs, n - 2)
    ):
        return FamilyTag(Family.E2_PLUS_MATCHING, {"n": n})
    if (
        n >= 5
        and counts.get(n - 2, 0) == 2
        and counts.get(4, 0) == n - 2
        and _class_pair_nonadjacent(g, degs, n - 2)
    ):
        # the degree-4 part must induce one cycle, not a cycle union
        cyc = 0
        for v in range(n):
            if degs[v] == 4:
                cyc |= 1 << v
        inner_ok = all(
            (g.rows[v] & cyc).bit_count() == 2
            for v in range(n)
            if cyc >> v & 1
        )
        if inner_ok and _connected_within(g.rows, cyc):
            return FamilyTag(Family.E2_PLUS_CYCLE, {"n": n})
    if (
        n >= 5
        and n % 2 == 1
        and counts.get(n - 1, 0) == 1
        and counts.get(2, 0) == n - 1
    ):
        return FamilyTag(Family.WINDMILL, {"n": n, "r": (n - 1) // 2})
    if n >= 5 and counts.get(n - 1, 0) == 1 and counts.get(3, 0) == n - 1:
        return FamilyTag(Family.K1_PLUS_CYCLE_UNION, {"n": n})
    return None


def classify_outerplanar_alpha1(g: Graph) -> Optional[FamilyTag]:
    """The outerplanar alpha_ir = 1 family containing g, or None.

    Precedence order: disjoint cycle unions, the empty graph, the perfect
    matching, the star, K_{2,2}, K_2 + E_2, and the triangle windmill.  Every
    matcher is structural and exact, so no outerplanarity test is needed.
    """
    if not satisfies_lemma31(g):
        return None
    n, degs = g.n, g.degrees()
    counts = Counter(degs)
    if counts.get(2, 0) == n:
        return FamilyTag(Family.CYCLE_UNION, {"n": n})
    if g.m == 0:
        return FamilyTag(Family.EMPTY, {"n": n})
    if counts.get(1, 0) == n:
        return FamilyTag(Family.PERFECT_MATCHING, {"n": n})
    if counts.get(n - 1, 0) == 1 and counts.get(1, 0) == n - 1:
        return FamilyTag(Family.STAR, {"n": n})
    if n == 4 and counts.get(2, 0) == 4:
        return FamilyTag(Family.K22, {})  # shadowed by the cycle branch
    if n == 4 and counts.get(3, 0) == 2 and counts.get(2, 0) == 2:
        return FamilyTag(Family.K2_PLUS_E2, {})
    if (
        n >= 5
        and n % 2 == 1
        and counts.get(n - 1, 0) == 1
        and counts.get(2, 0) == n - 1
    ):
        return FamilyTag(Family.WINDMILL, {"n": n, "r": (n - 1) // 2})
    return None


def classify_gamma_extremal(g: Graph) -> Optional[FamilyTag]:
    """Family tag predicting gamma_ir = n (Empty) or n - 1, else None.

    gamma_ir = n - 1 holds exactly for t isolated vertices plus either a star
    K_{1,r} or an r-regular graph with r >= 1; both shapes are read off the
    degree sequence.
    """
    if g.n < 1:
        raise ValueError("needs at least one vertex")
    n, degs = g.n, g.degrees()
    if g.m == 0:
        return FamilyTag(Family.EMPTY, {"n": n})
    t = sum(1 for d in degs if d == 0)
    live = [d for d in degs if d > 0]
    n_live = len(live)
    r = max(live)
    # a star: one hub of degree r touching every other live vertex
    if n_live == r + 1 and sum(live) == 2 * r:
        return FamilyTag(Family.ISOLATED_PLUS_STAR, {"t": t, "r": r})
    if min(live) == r:
        return FamilyTag(Family.ISOLATED_PLUS_REGULAR, {"t": t, "r": r})
    return None
