"""Exact parameter solvers against frozen values and the naive oracles."""

import pytest
from hypothesis import given, settings, strategies as st

from irregraph.graph import (
    VertexSet,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union_all,
    empty_graph,
    from_edge_mask,
    pair_count,
    path_graph,
    star_graph,
)
from irregraph.params import (
    alpha,
    alpha_ir,
    alpha_reg,
    full_report,
    gamma_ir,
    gamma_reg,
    is_dominating,
    is_independent,
    is_irregular_dominating,
    is_irregular_independent,
    is_regular_dominating,
    is_regular_independent,
    max_cut,
    naive_alpha,
    naive_alpha_ir,
    naive_alpha_reg,
    naive_gamma_ir,
    naive_gamma_reg,
    naive_max_cut,
)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << pair_count(n)) - 1))
    return from_edge_mask(n, mask)


def vs(n, *members):
    return VertexSet.from_members(n, members)


# -- predicates ---------------------------------------------------------------


def test_irregular_independent_predicate():
    p4 = path_graph(4)
    assert is_irregular_independent(p4, vs(4, 0, 2))  # degrees 1 and 2
    assert is_irregular_independent(p4, vs(4))  # vacuous
    assert not is_irregular_independent(p4, vs(4, 0, 3))  # equal degrees
    assert not is_irregular_independent(p4, vs(4, 1, 2))  # adjacent
    k13 = star_graph(4)
    assert not is_irregular_independent(k13, vs(4, 1, 2))  # two leaves


def test_irregular_dominating_predicate():
    p4 = path_graph(4)
    assert is_irregular_dominating(p4, vs(4, 0, 2))
    assert is_irregular_dominating(p4, vs(4, 0, 1, 2, 3))  # vacuous
    c4 = cycle_graph(4)
    assert not is_irregular_dominating(c4, vs(4, 0))  # vertex 2 undominated
    # {0,1} in C_4: both outside vertices see exactly one member
    assert not is_irregular_dominating(c4, vs(4, 0, 1))


def test_regular_predicates():
    p4 = path_graph(4)
    assert is_regular_independent(p4, vs(4, 0, 3))
    assert not is_regular_independent(p4, vs(4, 0, 2))
    assert is_regular_dominating(star_graph(4), vs(4, 0))
    assert not is_regular_dominating(p4, vs(4, 0))


def test_predicates_reject_mismatched_universe():
    with pytest.raises(ValueError):
        is_independent(path_graph(4), vs(5, 0))


# -- frozen example values ------------------------------------------------------


def test_alpha_values():
    assert alpha(complete_graph(6)).value == 1
    assert alpha(path_graph(4)).value == 2
    assert alpha(empty_graph(5)).value == 5


def test_alpha_ir_values():
    assert alpha_ir(complete_graph(5)).value == 1
    assert alpha_ir(path_graph(4)).value == 2
    k123 = disjoint_union_all(
        [complete_graph(1), complete_graph(2), complete_graph(3)]
    )
    assert alpha_ir(k123).value == 3  # Delta - delta + 1


def test_alpha_reg_values():
    assert alpha_reg(empty_graph(7)).value == 7
    assert alpha_reg(path_graph(4)).value == 2
    assert alpha_reg(cycle_graph(5)).value == 2


def test_gamma_ir_values():
    assert gamma_ir(empty_graph(3)).value == 3
    assert gamma_ir(cycle_graph(4)).value == 3
    assert gamma_ir(path_graph(4)).value == 2


def test_gamma_reg_values():
    assert gamma_reg(star_graph(4)).value == 1
    assert gamma_reg(empty_graph(4)).value == 4
    assert gamma_reg(path_graph(4)).value == 2


def test_max_cut_values():
    assert max_cut(empty_graph(4)).value == 0
    assert max_cut(path_graph(4)).value == 3  # bipartite: beta = m
    assert max_cut(cycle_graph(5)).value == 4


def test_full_report_frozen_rows():
    rows = {
        "P4": (path_graph(4), (2, 2, 2, 2, 2, 3, 2)),
        "K4": (complete_graph(4), (1, 1, 1, 3, 1, 4, 1)),
        "E3": (empty_graph(3), (3, 1, 3, 3, 3, 0, 1)),
    }
    for name, (g, want) in rows.items():
        r = full_report(g)
        got = (
            r.alpha,
            r.alpha_ir,
            r.alpha_reg,
            r.gamma_ir,
            r.gamma_reg,
            r.beta,
            r.span,
        )
        assert got == want, name


def test_witness_tie_break_is_smallest_mask():
    # P_4 endpoints and middles all admit optimal pairs; the smallest masks:
    assert alpha(path_graph(4)).witness.members == (0, 2)
    assert gamma_ir(path_graph(4)).witness.members == (0, 2)
    assert max_cut(path_graph(4)).witness.members == (0, 2)
    assert alpha_ir(complete_graph(5)).witness.members == (0,)


def test_single_vertex():
    r = full_report(complete_graph(1))
    assert (r.alpha, r.alpha_ir, r.alpha_reg, r.gamma_ir, r.gamma_reg) == (
        1,
        1,
        1,
        1,
        1,
    )
    assert r.beta == 0


def test_size_guard():
    big = empty_graph(27)
    with pytest.raises(ValueError):
        gamma_ir(big)
    with pytest.raises(ValueError):
        max_cut(big)
    with pytest.raises(ValueError):
        alpha(empty_graph(0))


def test_report_serialization():
    r = full_report(path_graph(4))
    blob = r.to_json()
    assert blob["avg_degree"] == [3, 2]
    assert blob["witnesses"]["gamma_ir"] == [0, 2]
    assert blob["beta"] == 3


# -- oracle equivalence -----------------------------------------------------------


SOLVER_PAIRS = [
    (alpha, naive_alpha),
    (alpha_ir, naive_alpha_ir),
    (alpha_reg, naive_alpha_reg),
    (gamma_ir, naive_gamma_ir),
    (gamma_reg, naive_gamma_reg),
    (max_cut, naive_max_cut),
]


@pytest.mark.parametrize("fast,slow", SOLVER_PAIRS, ids=lambda f: f.__name__)
def test_oracle_equivalence_exhaustive_n4(fast, slow):
    for mask in range(1 << pair_count(4)):
        g = from_edge_mask(4, mask)
        assert fast(g) == slow(g), mask


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_oracle_equivalence_random(g):
    for fast, slow in SOLVER_PAIRS:
        assert fast(g) == slow(g)


# -- structural invariants ----------------------------------------------------------


@settings(deadline=None)
@given(graphs(max_n=8))
def test_report_invariants(g):
    r = full_report(g)
    n = g.n
    assert 1 <= r.alpha_ir <= r.alpha <= n
    assert 1 <= r.alpha_reg <= r.alpha
    assert (n + 1) // 2 <= r.gamma_ir <= n
    assert max((n + 1) // 2, n - r.Delta) <= r.gamma_ir
    assert r.alpha_ir <= r.span
    assert r.beta <= r.m
    for key, ws in r.witnesses.items():
        if key != "beta":  # a cut witness is a side, not a set of size beta
            assert ws.size == getattr(r, key)


@settings(deadline=None)
@given(graphs(max_n=8))
def test_complement_degree_identity(g):
    c = complement(g)
    for v in range(g.n):
        assert c.degree(v) == g.n - 1 - g.degree(v)


@settings(deadline=None)
@given(graphs(max_n=7))
def test_max_cut_realizes_all_bipartite_edges(g):
    beta, side = max_cut(g)
    # recount the cut from the witness
    out = ((1 << g.n) - 1) ^ side.mask
    recount = sum((g.rows[v] & out).bit_count() for v in side)
    assert recount == beta
    assert beta <= g.m


def test_bipartite_cut_equals_m():
    for g in (path_graph(6), cycle_graph(6), star_graph(5)):
        assert max_cut(g).value == g.m


def test_is_dominating_basics():
    c4 = cycle_graph(4)
    assert is_dominating(c4, vs(4, 0, 1))
    assert not is_dominating(c4, vs(4, 0))
    assert is_dominating(empty_graph(2), vs(2, 0, 1))
    assert not is_dominating(empty_graph(2), vs(2, 0))
