"""Bound formulas: frozen example values, collapses, and soundness sweeps."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from irregraph.bounds import (
    DEFAULT_RAMSEY,
    BoundInputs,
    RamseyTable,
    lb_gamma_ir_cor43,
    lb_gamma_ir_thm41,
    lb_gamma_ir_thm42,
    le_with_tol,
    ub_alpha_ir_eq1,
    ub_alpha_ir_thm21,
    ub_alpha_ir_thm22,
    ub_gamma_ir_thm45,
    ub_span_thm32,
    within_tol,
)
from irregraph.graph import from_edge_mask, pair_count, path_graph
from irregraph.params import alpha_ir, gamma_ir


def stats(n, m, delta, Delta, beta, span):
    return BoundInputs(
        n=n,
        m=m,
        delta=delta,
        Delta=Delta,
        beta=beta,
        span=span,
        avg_degree=Fraction(2 * m, n),
    )


P4_STATS = stats(n=4, m=3, delta=1, Delta=2, beta=3, span=2)
E4_STATS = stats(n=4, m=0, delta=0, Delta=0, beta=0, span=1)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << pair_count(n)) - 1))
    return from_edge_mask(n, mask)


def test_bound_inputs_validation():
    with pytest.raises(ValueError):
        stats(n=4, m=3, delta=2, Delta=1, beta=3, span=2)  # delta > Delta
    with pytest.raises(ValueError):
        stats(n=4, m=3, delta=1, Delta=2, beta=4, span=2)  # beta > m
    with pytest.raises(ValueError):
        BoundInputs(4, 3, 1, 2, 3, 2, Fraction(1))  # wrong avg_degree
    assert BoundInputs.from_graph(path_graph(4)) == P4_STATS


def test_thm21_values():
    assert ub_alpha_ir_thm21(P4_STATS) == 2
    assert ub_alpha_ir_thm21(E4_STATS) == 1
    # 3-regular on 6 vertices: the spread term pins the bound to 1
    reg = stats(n=6, m=9, delta=3, Delta=3, beta=9, span=1)
    assert ub_alpha_ir_thm21(reg) == 1
    # radical term unrounded when it is the strict minimum
    dense = stats(n=7, m=10, delta=0, Delta=5, beta=9, span=3)
    assert within_tol(ub_alpha_ir_thm21(dense), (1 + math.sqrt(45)) / 2)


def test_eq1_values():
    assert within_tol(ub_alpha_ir_eq1(P4_STATS), 2.0)
    assert within_tol(ub_alpha_ir_eq1(E4_STATS), 1.0)


def test_eq1_collapse_grid():
    # delta = r and m = t(2r + t - 1)/2 collapse the radical to exactly t
    for r in range(0, 5):
        for t in range(1, 7):
            m = t * (2 * r + t - 1) // 2
            n = max(r + t + 1, 2 * m)  # any consistent frame
            inp = stats(n=n, m=m, delta=r, Delta=min(n - 1, max(r, m)), beta=m, span=1)
            assert within_tol(ub_alpha_ir_eq1(inp), float(t)), (r, t)


def test_thm22_values_and_collapse():
    assert within_tol(ub_alpha_ir_thm22(P4_STATS), 2.0)
    for r in range(0, 4):
        for t in range(1, 6):
            b = t * (2 * r + t - 1) // 2
            n = max(r + t + 1, 2 * b)
            inp = stats(n=n, m=b, delta=r, Delta=min(n - 1, max(r, b)), beta=b, span=1)
            assert within_tol(ub_alpha_ir_thm22(inp), float(t)), (r, t)


def test_span_bound_values():
    assert within_tol(ub_span_thm32(1), 2.0)
    assert within_tol(ub_span_thm32(0), 1.0)
    # delta = n - k with n = k(k+1)/2 collapses to exactly k
    for k in range(1, 8):
        n = k * (k + 1) // 2
        assert within_tol(ub_span_thm32(n - k), float(k)), k
    with pytest.raises(ValueError):
        ub_span_thm32(-1)


def test_thm41_values():
    assert lb_gamma_ir_thm41(4, 2) == 2
    assert lb_gamma_ir_thm41(3, 0) == 3
    assert lb_gamma_ir_thm41(7, 3) == 4
    with pytest.raises(ValueError):
        lb_gamma_ir_thm41(4, 4)


def test_thm42_values():
    assert lb_gamma_ir_thm42(5, 0) == 5.0
    assert within_tol(lb_gamma_ir_thm42(4, 4), 4 + (1 - math.sqrt(33)) / 2)
    # beta = n'(n'+1)/2 with n' = n - k collapses to exactly k
    for n in range(2, 12):
        for k in range(1, n + 1):
            npr = n - k
            assert within_tol(
                lb_gamma_ir_thm42(n, npr * (npr + 1) // 2), float(k)
            ), (n, k)


def test_cor43_values():
    assert lb_gamma_ir_cor43(5, Fraction(0)) == 5.0
    assert within_tol(lb_gamma_ir_cor43(4, Fraction(3, 2)), 4 - math.sqrt(6))
    assert lb_gamma_ir_cor43(1, Fraction(0)) == 1.0


def test_thm45_values():
    assert ub_gamma_ir_thm45(20, 6, 3) == 17
    assert ub_gamma_ir_thm45(20, 5, 3) == 17  # second rule only
    assert ub_gamma_ir_thm45(20, 18, 4) == 16  # R(4,4) = 18
    assert ub_gamma_ir_thm45(10, 2, 2) == 8
    # k = 1 fires for any graph with an edge everywhere: R(1,1) = 1
    assert ub_gamma_ir_thm45(10, 2, 1) == 9
    # delta = 0 disables every rule
    assert ub_gamma_ir_thm45(10, 1, 0) is None
    assert ub_gamma_ir_thm45(10, 6, 0) is None


def test_ramsey_table():
    assert DEFAULT_RAMSEY[3] == 6
    assert DEFAULT_RAMSEY.known_k == (1, 2, 3, 4)
    assert 4 in DEFAULT_RAMSEY and 5 not in DEFAULT_RAMSEY
    with pytest.raises(KeyError):
        RamseyTable()[5]


@settings(deadline=None)
@given(graphs())
def test_alpha_ir_bounds_sound(g):
    inp = BoundInputs.from_graph(g)
    a = alpha_ir(g).value
    assert a <= ub_alpha_ir_thm21(inp) + 1e-9
    assert a <= ub_alpha_ir_eq1(inp) + 1e-9
    assert a <= ub_alpha_ir_thm22(inp) + 1e-9


@settings(deadline=None)
@given(graphs())
def test_gamma_ir_bounds_sound(g):
    inp = BoundInputs.from_graph(g)
    value = gamma_ir(g).value
    assert value >= lb_gamma_ir_thm41(inp.n, inp.Delta)
    assert value >= lb_gamma_ir_thm42(inp.n, inp.beta) - 1e-9
    assert value >= lb_gamma_ir_cor43(inp.n, inp.avg_degree) - 1e-9
    ub = ub_gamma_ir_thm45(inp.n, inp.span, inp.delta)
    if ub is not None:
        assert value <= ub


@settings(deadline=None)
@given(graphs())
def test_thm22_dominates_eq1(g):
    inp = BoundInputs.from_graph(g)
    assert ub_alpha_ir_thm22(inp) <= ub_alpha_ir_eq1(inp) + 1e-12


def test_tolerance_helpers():
    assert within_tol(2.0, 2.0 + 5e-10)
    assert not within_tol(2.0, 2.1)
    assert le_with_tol(2.0 + 5e-10, 2.0)
    assert not le_with_tol(2.1, 2.0)
