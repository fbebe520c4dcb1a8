"""Immutable simple graphs with bitmask adjacency.

A graph on n vertices is stored as a tuple of n integers; bit u of row v is 1
exactly when {u, v} is an edge.  Vertices are the integers 0..n-1.  All
operations return new graphs; nothing here mutates shared state, so graphs can
be handed to any number of workers.

The module also provides the degree classification used throughout (degree
classes N_i, their sizes, the span), isomorphism testing by backtracking over
degree-compatible assignments, and a bit-exact graph6 codec restricted to the
short form (1 <= n <= 62).

Edge-mask convention: the C(n,2) vertex pairs are numbered in column-major
upper-triangle order, pair (u, v) with u < v at position v*(v-1)/2 + u.  This
matches the bit order of the graph6 format, so the integer produced by
``Graph.edge_mask`` packs exactly the bits that graph6 serializes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def pair_index(u: int, v: int) -> int:
    """Position of pair {u, v} in column-major upper-triangle order."""
    if u == v:
        raise ValueError("self-pair has no index")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of an n-vertex graph, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError("mask has bits outside [0, n)")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.mask >> v & 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.size


class Graph:
    """Simple undirected graph; immutable after construction."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(rows) != n:
            raise ValueError("row count does not match n")
        for v, row in enumerate(rows):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row < 0 or row >> n:
                raise ValueError(f"row {v} has bits outside [0, n)")
        for v in range(n):
            for u in range(v):
                if (rows[u] >> v & 1) != (rows[v] >> u & 1):
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            row = self.rows[v] & ((1 << v) - 1)
            while row:
                u = (row & -row).bit_length() - 1
                yield (u, v)
                row &= row - 1

    @property
    def edge_mask(self) -> int:
        """All edges packed into one integer in pair-index order."""
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(u, v)
        return mask

    def neighbors(self, v: int) -> tuple[int, ...]:
        row = self.rows[v]
        return tuple(u for u in range(self.n) if row >> u & 1)

    def induced(self, members: Iterable[int]) -> "Graph":
        """Subgraph induced by the given vertices, relabeled 0..k-1."""
        keep = sorted(set(members))
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            row = self.rows[v]
            for u in keep:
                if row >> u & 1:
                    rows[index[v]] |= 1 << index[u]
        return Graph(len(keep), rows)


# -- constructors ---------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with exactly the given edges; duplicate pairs collapse."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def from_edge_mask(n: int, mask: int) -> Graph:
    """Inverse of Graph.edge_mask: unpack a pair-indexed edge integer."""
    if mask < 0 or mask >> pair_count(n):
        raise ValueError("edge mask out of range")
    rows = [0] * n
    p = 0
    for v in range(n):
        for u in range(v):
            if mask >> p & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            p += 1
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with the center at vertex 0."""
    if n < 1:
        raise ValueError("star needs at least 1 vertex")
    return from_edges(n, [(0, v) for v in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def matching_graph(k: int) -> Graph:
    """k disjoint edges on 2k vertices."""
    return from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.rows)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [row << g.n for row in h.rows]
    return Graph(g.n + h.n, rows)


def disjoint_union_all(graphs: Iterable[Graph]) -> Graph:
    out = empty_graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << g.n
    rows = [row | h_all for row in g.rows]
    rows += [(row << g.n) | g_all for row in h.rows]
    return Graph(g.n + h.n, rows)


def windmill(k: int, r: int) -> Graph:
    """Wd(k, r): one hub joined to r disjoint copies of K_{k-1}."""
    if k < 2 or r < 2:
        raise ValueError("windmills require k >= 2 and r >= 2")
    blades = disjoint_union_all(complete_graph(k - 1) for _ in range(r))
    return join(complete_graph(1), blades)


# -- degree classification ------------------------------------------------


@dataclass(frozen=True)
class DegreeClassification:
    """Degree analytics: classes N_i, their sizes, and the span."""

    degrees: tuple[int, ...]
    distinct: tuple[int, ...]
    classes: dict[int, VertexSet]
    sizes: dict[int, int]
    span: int
    delta: int
    Delta: int


def classify_degrees(g: Graph) -> DegreeClassification:
    """Group vertices by degree.  Undefined (raises) for n = 0."""
    if g.n == 0:
        raise ValueError("degree classification needs at least one vertex")
    degs = g.degrees()
    classes: dict[int, int] = {}
    for v, d in enumerate(degs):
        classes[d] = classes.get(d, 0) | (1 << v)
    distinct = tuple(sorted(classes))
    return DegreeClassification(
        degrees=degs,
        distinct=distinct,
        classes={d: VertexSet(g.n, classes[d]) for d in distinct},
        sizes={d: classes[d].bit_count() for d in distinct},
        span=len(distinct),
        delta=distinct[0],
        Delta=distinct[-1],
    )


# -- isomorphism ----------------------------------------------------------


def _invariant(g: Graph) -> tuple:
    degs = g.degrees()
    neighbor_profiles = tuple(
        sorted(tuple(sorted(degs[u] for u in g.neighbors(v))) for v in range(g.n))
    )
    return (g.n, g.m, tuple(sorted(degs)), neighbor_profiles)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test; intended for n up to about 12.

    A cheap invariant (order, size, degree sequence, sorted multiset of
    neighbor degrees per vertex) prescreens most non-isomorphic pairs, then a
    backtracking search maps vertices of g onto degree-compatible vertices of
    h, checking adjacency against all previously mapped vertices.
    """
    if _invariant(g) != _invariant(h):
        return False
    n = g.n
    degs_g, degs_h = g.degrees(), h.degrees()
    # Mapping vertices in order of rarest degree first shrinks the branching.
    freq: dict[int, int] = {}
    for d in degs_g:
        freq[d] = freq.get(d, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[degs_g[v]], degs_g[v], v))
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or degs_h[w] != degs_g[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(v, u) != h.has_edge(w, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return extend(0)


# -- graph6 codec ---------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def write_graph6(g: Graph) -> str:
    """Encode in graph6 short form; defined for 1 <= n <= 62."""
    if not 1 <= g.n <= 62:
        raise Graph6Error("short-form graph6 covers 1 <= n <= 62")
    out = [chr(g.n + 63)]
    mask = g.edge_mask
    nbits = pair_count(g.n)
    for start in range(0, nbits, 6):
        group = 0
        for k in range(6):
            p = start + k
            bit = (mask >> p & 1) if p < nbits else 0
            group = (group << 1) | bit
        out.append(chr(group + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one short-form graph6 value; bit-exact inverse of write_graph6."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="strict")
    text = text.strip()
    if not text:
        raise Graph6Error("empty graph6 value")
    head = ord(text[0])
    if head == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if not 63 <= head <= 125:
        raise Graph6Error(f"bad header byte {head}")
    n = head - 63
    nbits = pair_count(n)
    ngroups = (nbits + 5) // 6
    body = text[1:]
    if len(body) != ngroups:
        raise Graph6Error(
            f"expected {ngroups} body bytes for n={n}, got {len(body)}"
        )
    mask = 0
    for i, ch in enumerate(body):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"bad body byte {code}")
        group = code - 63
        for k in range(6):
            p = 6 * i + k
            bit = group >> (5 - k) & 1
            if p < nbits:
                mask |= bit << p
            elif bit:
                raise Graph6Error("nonzero padding bits")
    return from_edge_mask(n, mask)
