"""Vectorized whole-order sweep engine.

The scalar engine walks graphs one at a time.  This module instead fixes the
order n and treats the whole labeled family as one numpy axis: the edge mask
0 .. 2^C(n,2)-1 is the element index, and every quantity a check reads
becomes an array over that axis.  Degree profiles fall out of the mask bits.
The alpha-type maxima and gamma-type minima come from a loop over the 2^n
vertex subsets, the max cut from a loop over the 2^(n-1) bipartitions, so the
per-graph work is amortized across the entire order at numpy speed.

Planarity is a table per order: mark the edge mask of every labeled
subdivision of a forbidden subgraph (K_5 and K_{3,3}; K_4 and K_{2,3} for the
outerplanar table), then close the marks upward over the subset lattice, one
in-place sweep per edge slot.  Membership is then a single indexed load.

All arithmetic is exact integer work in uint8/int16, with the radical bounds
compared in squared form, so the engine never touches floats and agrees with
the scalar checks bit for bit.  The cap is n <= 7: each extra vertex doubles
the mask axis C(n,2) - C(n-1,2) times, and order 8 would need 2^28 elements
per array.
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import numpy as np

from irregraph.bounds import DEFAULT_RAMSEY
from irregraph.graph import pair_count, pair_index
from irregraph.harness import (
    BULK_LIMIT,
    CheckConfig,
    DEFAULT_CONFIG,
    _blank_counts,
    _merge_counts,
)

_CHUNK = 1 << 18

_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)
_POP16 = (
    _POP8[np.arange(1 << 16) & 0xFF] + _POP8[np.arange(1 << 16) >> 8]
).astype(np.uint8)
_BIT8 = np.array([1 << i for i in range(8)], dtype=np.uint8)


# -- per-order lookup tables --------------------------------------------------------


def _pair_table(n: int) -> list:
    """(edge slot, u, v) for every vertex pair, in slot order."""
    return [(pair_index(u, v), u, v) for v in range(n) for u in range(v)]


def _subset_tables(n: int) -> list:
    """(subset, size, members, inside edge slots) for every nonempty subset."""
    pairs = _pair_table(n)
    table = []
    for s in range(1, 1 << n):
        members = [v for v in range(n) if s >> v & 1]
        inside = [e for e, u, v in pairs if s >> u & 1 and s >> v & 1]
        table.append((s, len(members), members, inside))
    return table


def _cut_masks(n: int) -> list:
    """Edge-slot masks of all cuts; one side always avoids vertex n - 1."""
    pairs = _pair_table(n)
    masks = []
    for side in range(1, 1 << (n - 1)):
        cross = 0
        for e, u, v in pairs:
            if (side >> u & 1) != (side >> v & 1):
                cross |= 1 << e
        masks.append(cross)
    return masks


# -- planarity tables ---------------------------------------------------------------


def _complete_bases(k: int, n: int) -> list:
    return [
        frozenset(combinations(verts, 2))
        for verts in combinations(range(n), k)
    ]


def _bipartite_bases(a: int, b: int, n: int) -> list:
    out = set()
    for verts in combinations(range(n), a + b):
        for left in combinations(verts, a):
            chosen = set(left)
            out.add(frozenset(
                (min(u, v), max(u, v))
                for u in left
                for v in verts
                if v not in chosen
            ))
    return list(out)


def _subdivision_masks(bases: list, n: int) -> set:
    """Edge masks of every labeled subdivision of the bases on labels < n.

    One subdivision step replaces an edge by a two-edge path through a fresh
    label, so the closure walks graphs in order of vertex usage and never
    revisits an edge set twice.
    """
    seen: set[int] = set()
    queue = list(bases)
    while queue:
        edges = queue.pop()
        mask = 0
        used = 0
        for u, v in edges:
            mask |= 1 << pair_index(u, v)
            used |= 1 << u | 1 << v
        if mask in seen:
            continue
        seen.add(mask)
        free = [w for w in range(n) if not used >> w & 1]
        if not free:
            continue
        for u, v in edges:
            rest = edges - {(u, v)}
            for w in free:
                queue.append(
                    rest | {(min(u, w), max(u, w)), (min(v, w), max(v, w))}
                )
    return seen


def _obstruction_table(bases: list, n: int) -> np.ndarray:
    """Bool array over edge masks: contains some subdivision of a base."""
    blocked = np.zeros(1 << pair_count(n), dtype=bool)
    masks = _subdivision_masks(bases, n)
    if masks:
        blocked[np.fromiter(masks, dtype=np.int64, count=len(masks))] = True
    # upward closure: adding edges can only keep an obstruction present
    for b in range(pair_count(n)):
        view = blocked.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    return blocked


_TABLE_CACHE: dict = {}


def _planarity_tables(n: int):
    """(planar, outerplanar) bool arrays indexed by edge mask, cached per n."""
    if n not in _TABLE_CACHE:
        nonplanar = _obstruction_table(
            _complete_bases(5, n) + _bipartite_bases(3, 3, n), n
        )
        nonouter = _obstruction_table(
            _complete_bases(4, n) + _bipartite_bases(2, 3, n), n
        )
        _TABLE_CACHE[n] = (~nonplanar, ~nonouter)
    return _TABLE_CACHE[n]


# -- the chunk pass -----------------------------------------------------------------


def _chunk(n, lo, hi, cfg, planar, outer, subsets, cuts, pairs):
    size = hi - lo
    nedges = pair_count(n)
    masks = np.arange(lo, hi, dtype=np.int64)
    ebit = [((masks >> e) & 1).astype(np.uint8) for e in range(nedges)]

    deg = [np.zeros(size, np.uint8) for _ in range(n)]
    for e, u, v in pairs:
        deg[u] += ebit[e]
        deg[v] += ebit[e]
    m = np.zeros(size, np.int16)
    for e in range(nedges):
        m += ebit[e]
    delta = deg[0].copy()
    Delta = deg[0].copy()
    for v in range(1, n):
        np.minimum(delta, deg[v], out=delta)
        np.maximum(Delta, deg[v], out=Delta)

    onehot = [_BIT8[d] for d in deg]
    span_oh = np.zeros(size, np.uint8)
    for v in range(n):
        span_oh |= onehot[v]
    span = _POP8[span_oh]

    cnt = [np.zeros(size, np.uint8) for _ in range(n)]
    for v in range(n):
        for k in range(n):
            cnt[k] += deg[v] == k

    rows = [np.zeros(size, np.uint8) for _ in range(n)]
    for e, u, v in pairs:
        rows[u] |= ebit[e] << v
        rows[v] |= ebit[e] << u

    # independence family: a clique here is an independent set in the
    # complement, and degree distinctness carries over since d -> n-1-d
    a = np.zeros(size, np.uint8)
    a_ir = np.zeros(size, np.uint8)
    a_reg = np.zeros(size, np.uint8)
    a_ir_c = np.zeros(size, np.uint8)
    for _, k, members, inside in subsets:
        anyedge = np.zeros(size, np.uint8)
        alledge = np.ones(size, np.uint8)
        for e in inside:
            anyedge |= ebit[e]
            alledge &= ebit[e]
        oh = np.zeros(size, np.uint8)
        for v in members:
            oh |= onehot[v]
        independent = anyedge == 0
        distinct = _POP8[oh] == k
        equal = oh & (oh - 1) == 0
        k8 = np.uint8(k)
        np.maximum(a, np.where(independent, k8, 0), out=a)
        np.maximum(a_ir, np.where(independent & distinct, k8, 0), out=a_ir)
        np.maximum(a_reg, np.where(independent & equal, k8, 0), out=a_reg)
        np.maximum(a_ir_c, np.where((alledge == 1) & distinct, k8, 0), out=a_ir_c)

    # domination family, both graph and complement in one pass: a vertex
    # outside D sees |D| - hits neighbors of D in the complement
    g_ir = np.full(size, 127, np.uint8)
    g_ir_c = np.full(size, 127, np.uint8)
    for dset, k, _, _ in subsets:
        d8 = np.uint8(dset)
        k8 = np.uint8(k)
        oh = np.zeros(size, np.uint8)
        ohc = np.zeros(size, np.uint8)
        for v in range(n):
            if dset >> v & 1:
                continue
            hits = _POP8[rows[v] & d8]
            oh |= _BIT8[hits]
            ohc |= _BIT8[k8 - hits]
        outside = n - k
        good = (_POP8[oh] == outside) & ((oh & 1) == 0)
        goodc = (_POP8[ohc] == outside) & ((ohc & 1) == 0)
        np.minimum(g_ir, np.where(good, k8, 127), out=g_ir)
        np.minimum(g_ir_c, np.where(goodc, k8, 127), out=g_ir_c)

    beta = np.zeros(size, np.int16)
    for cross in cuts:
        x = masks & cross
        np.maximum(beta, _POP16[x & 0xFFFF] + _POP16[x >> 16], out=beta)

    # the alpha_ir = 1 degree structure: cross-class pairs all adjacent, and
    # the class of degree k induces a (k + n_k - n)-regular subgraph
    cross_bad = np.zeros(size, bool)
    w = [np.zeros(size, np.uint8) for _ in range(n)]
    for e, u, v in pairs:
        same = deg[u] == deg[v]
        cross_bad |= (ebit[e] == 0) & ~same
        c = ebit[e] & same
        w[u] += c
        w[v] += c
    nk = np.take_along_axis(
        np.stack(cnt), np.stack(deg).astype(np.intp), axis=0
    )
    lemma = ~cross_bad
    for v in range(n):
        lemma &= w[v] == deg[v].astype(np.int16) + nk[v] - n

    t32i_ok = np.ones(size, bool)
    for k in range(n):
        t32i_ok &= (cnt[k] == 0) | (cnt[k] >= n - k)

    zero8 = np.zeros(size, np.uint8)

    def cget(k):
        return cnt[k] if 0 <= k < n else zero8

    if n >= 5:
        # adjacency inside the two-vertex degree class of degree n - 2
        hp_adj = np.zeros(size, bool)
        for e, u, v in pairs:
            hp_adj |= (ebit[e] == 1) & (deg[u] == n - 2) & (deg[v] == n - 2)
        # the degree-4 part must be 2-regular within itself; on <= 5 inner
        # vertices that already forces a single cycle, so the scalar
        # engine's connectivity test has no work left at these orders
        ideg = [np.zeros(size, np.uint8) for _ in range(n)]
        for e, u, v in pairs:
            c = ebit[e] & (deg[u] == 4) & (deg[v] == 4)
            ideg[u] += c
            ideg[v] += c
        inner_ok = np.ones(size, bool)
        for v in range(n):
            inner_ok &= (deg[v] != 4) | (ideg[v] == 2)

    pl = planar[lo:hi]
    op = outer[lo:hi]

    union_p = (span == 1) & pl
    union_p |= (cget(n - 1) == 1) & (cget(1) == n - 1)
    if n >= 5:
        union_p |= (cget(n - 2) == 2) & (cget(2) == n - 2) & ~hp_adj
    if n >= 4:
        union_p |= (cget(n - 1) == 2) & (cget(2) == n - 2)
    if n >= 6 and n % 2 == 0:
        union_p |= (cget(n - 1) == 2) & (cget(3) == n - 2)
        union_p |= (cget(n - 2) == 2) & (cget(3) == n - 2) & ~hp_adj
    if n >= 5:
        union_p |= (
            (cget(n - 2) == 2) & (cget(4) == n - 2) & ~hp_adj & inner_ok
        )
    if n >= 5 and n % 2 == 1:
        union_p |= (cget(n - 1) == 1) & (cget(2) == n - 1)
    if n >= 5:
        union_p |= (cget(n - 1) == 1) & (cget(3) == n - 1)

    union_o = cget(2) == n
    union_o |= m == 0
    union_o |= cget(1) == n
    union_o |= (cget(n - 1) == 1) & (cget(1) == n - 1)
    if n == 4:
        union_o |= (cget(3) == 2) & (cget(2) == 2)
    if n >= 5 and n % 2 == 1:
        union_o |= (cget(n - 1) == 1) & (cget(2) == n - 1)

    # gamma_ir = n - 1 shapes: isolated vertices plus one star, or isolated
    # vertices plus a regular graph with positive degree
    live = n - cget(0).astype(np.int16)
    star_t = (m >= 1) & (m == Delta) & (live == Delta.astype(np.int16) + 1)
    reg_t = (m >= 1) & (_POP8[span_oh & np.uint8(0xFE)] == 1)
    union_g = star_t | reg_t

    A = a_ir.astype(np.int16)
    RG = a_reg.astype(np.int16)
    AL = a.astype(np.int16)
    AC = a_ir_c.astype(np.int16)
    G = g_ir.astype(np.int16)
    GC = g_ir_c.astype(np.int16)
    DL = delta.astype(np.int16)
    DU = Delta.astype(np.int16)
    SP = span.astype(np.int16)
    always = np.ones(size, bool)
    never = np.zeros(size, bool)

    half_lo = n // 2
    half_hi = (n + 1) // 2
    cap_mid = half_lo * half_hi
    cap_up = half_hi * ((n + 2) // 2)

    checks = []
    rad = 2 * n * n - 2 * n + 1 - 4 * m
    checks.append(("T2.1", always,
                   (A >= 1)
                   & (A <= DU - DL + 1)
                   & (A <= (n - DL + 1) // 2)
                   & ((2 * A - 1) ** 2 <= rad)))
    lhs_sq = A * (A + 2 * DL - 1)
    checks.append(("E1", always, lhs_sq <= 2 * m))
    checks.append(("T2.2", always, lhs_sq <= 2 * beta))
    ssum = A + RG
    prod = A * RG
    checks.append(("T2.3i", always, (ssum >= 2) & (ssum <= n + 1)))
    checks.append(("T2.3ii", always, (prod >= AL) & (prod <= AL * AL)))
    if n >= 4:
        checks.append(("T2.3iii", always, (prod >= 1) & (prod <= cap_mid)))
    else:
        checks.append(("T2.3iii", never, always))
    checks.append(("T2.3b", always, (ssum == n + 1) == (m == 0)))
    if n >= 4:
        checks.append(("C2.4", always, prod <= np.minimum(AL * AL, cap_mid)))
    else:
        checks.append(("C2.4", never, always))
    one = A == 1
    checks.append(("L3.1", always, lemma == one))
    checks.append(("T3.2i", one, t32i_ok))
    checks.append(("T3.2ii", one, SP * (SP - 1) <= 2 * DL))
    checks.append(("T3.3", always, (pl & one) == (lemma & union_p)))
    checks.append(("C3.6", always, (op & one) == (lemma & union_o)))
    ceil_term = -(-n // cfg.t41_divisor)
    checks.append(("T4.1", always, G >= np.maximum(ceil_term, n - DU)))
    gap = n - G
    checks.append(("T4.2", always, gap * (gap + 1) <= 2 * beta))
    checks.append(("C4.3", always,
                   (gap * gap <= 2 * m) & ((gap * gap == 2 * m) == (m == 0))))
    checks.append(("T4.4i", always, (G == n) == (m == 0)))
    checks.append(("T4.4ii", always, (G == n - 1) == union_g))
    kbest = np.zeros(size, np.int16)
    for k in DEFAULT_RAMSEY.known_k:
        fired = (SP >= DEFAULT_RAMSEY[k]) & (DL >= k)
        kbest = np.where(fired, np.int16(k), kbest)
    checks.append(("T4.5i", kbest >= 1, G <= n - kbest))
    checks.append(("T4.5ii", (SP >= 5) & (DL >= 3), G <= n - 3))
    cap51 = np.where(DL == 0, np.int16(n + 1), np.int16(n))
    checks.append(("T5.1i", always, A + G <= cap51))
    cap51p = np.where(DL == 0, np.int16(cap_up), np.int16(cap_mid))
    checks.append(("T5.1ii", always, A * G <= cap51p))
    checks.append(("T5.1iii", always, A + GC <= n + 1))
    checks.append(("T5.1iv", always, A * GC <= cap_up))
    if n >= 2:
        s61 = A + AC
        p61 = A * AC
        checks.append(("T6.1i", always, (s61 >= 2) & (s61 <= n)))
        checks.append(("T6.1ii", always, (p61 >= 1) & (p61 <= cap_mid)))
        ext = (m == 0) | (m == nedges)
        s62 = G + GC
        p62 = G * GC
        checks.append(("T6.2i", always,
                       (s62 >= 2 * half_hi)
                       & (s62 <= 2 * n - 1)
                       & ((s62 == 2 * n - 1) == ext)))
        checks.append(("T6.2ii", always,
                       (p62 >= half_hi * half_hi)
                       & (p62 <= n * (n - 1))
                       & ((p62 == n * (n - 1)) == ext)))
    else:
        for tid in ("T6.1i", "T6.1ii", "T6.2i", "T6.2ii"):
            checks.append((tid, never, always))

    counts = _blank_counts()
    any_fail = np.zeros(size, bool)
    for tid, app, ok in checks:
        bad = app & ~ok
        any_fail |= bad
        nbad = int(bad.sum())
        napp = int(app.sum())
        counts[tid]["fail"] += nbad
        counts[tid]["pass"] += napp - nbad
        counts[tid]["not_applicable"] += size - napp
    violating = [int(masks[i]) for i in np.nonzero(any_fail)[0]]
    return counts, violating


def sweep_order_bulk(n: int, workers: int = 1, cfg: CheckConfig = DEFAULT_CONFIG):
    """Counts per check and violating edge masks over all graphs of order n.

    Drop-in replacement for the scalar per-order sweep; the two engines
    return identical results and the tests cross-check them.
    """
    if not 1 <= n <= BULK_LIMIT:
        raise ValueError(f"bulk engine handles 1 <= n <= {BULK_LIMIT}")
    planar, outer = _planarity_tables(n)
    pairs = _pair_table(n)
    subsets = _subset_tables(n)
    cuts = _cut_masks(n)
    total = 1 << pair_count(n)
    ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]

    def run(bounds):
        return _chunk(
            n, bounds[0], bounds[1], cfg, planar, outer, subsets, cuts, pairs
        )

    if workers <= 1 or len(ranges) == 1:
        parts = [run(r) for r in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, ranges))
    counts = _blank_counts()
    violating: list[int] = []
    for part_counts, part_viol in parts:
        _merge_counts(counts, part_counts)
        violating.extend(part_viol)
    return counts, sorted(violating)
