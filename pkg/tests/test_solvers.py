import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdcj.breakpoint_graph import lb_signed_prefix_dcj
from pdcj.generators import gen_random, gen_tight_family
from pdcj.genome import (
    STRAIGHT,
    PrefixDcj,
    UnsignedGenome,
    apply_prefix_dcj,
    breakpoint_count,
    genome_from_unsigned_perm,
    identity_signed,
    identity_unsigned,
    signed_genome_from_perm,
)
from pdcj.oracle import oracle_distance
from pdcj.solvers import (
    BudgetExceeded,
    FptStats,
    approx_trace,
    fpt_bound,
    sort_signed_exact,
    sort_unsigned_approx,
    sort_unsigned_fpt,
    verify_scenario,
)


def test_signed_exact_examples():
    assert sort_signed_exact(identity_signed(3)).length == 0
    assert sort_signed_exact(signed_genome_from_perm((-1,))).length == 1
    g = signed_genome_from_perm((-1, 4, -3, -2, 5))
    s = sort_signed_exact(g)
    assert s.length == 3
    assert verify_scenario(g, s)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10**6))
def test_signed_exact_decreases_bound_every_move(n, seed):
    g = gen_random(n, "signed", seed)
    s = sort_signed_exact(g)
    bounds = [lb_signed_prefix_dcj(g)] + [lb_signed_prefix_dcj(h) for h in s.snapshots]
    assert bounds == list(range(bounds[0], -1, -1))


def test_approx_examples():
    assert sort_unsigned_approx(identity_unsigned(4)).length == 0
    assert sort_unsigned_approx(gen_tight_family(2)).length == 6
    # b = 1 via case 1: 0-2-1-3 needs only {0,1} in place
    g = genome_from_unsigned_perm((2, 1))
    assert breakpoint_count(g) == 1
    assert sort_unsigned_approx(g).length == 1


def test_approx_case_labels():
    trace = approx_trace(gen_tight_family(2))
    assert [c for c, _ in trace] == ["2'", "1", "1", "2'", "1", "1"]
    assert [b for _, b in trace] == [4, 3, 2, 2, 1, 0]


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10**6))
def test_approx_breakpoints_never_increase(n, seed):
    g = gen_random(n, "unsigned", seed)
    b0 = breakpoint_count(g)
    trace = approx_trace(g)
    counts = [b0] + [b for _, b in trace]
    assert all(y <= x for x, y in zip(counts, counts[1:]))
    assert len(trace) <= math.ceil(1.5 * b0)
    # a 2' step is always followed by two breakpoint-removing steps
    for i, (case, b) in enumerate(trace):
        if case == "2'":
            assert trace[i + 1][1] == b - 1 and trace[i + 2][1] == b - 2


def test_fpt_examples():
    assert sort_unsigned_fpt(identity_unsigned(3)).length == 0
    s = sort_unsigned_fpt(gen_tight_family(2))
    assert s.length == 6 and verify_scenario(gen_tight_family(2), s)


def test_fpt_budget():
    g = gen_tight_family(2)
    assert sort_unsigned_fpt(g, budget=6).length == 6
    with pytest.raises(BudgetExceeded):
        sort_unsigned_fpt(g, budget=5)


def test_fpt_bound_is_admissible_where_it_adds_one():
    # {0,1},{1,2} present and unsorted: the next move cannot remove a breakpoint
    g = genome_from_unsigned_perm((1, 2, 4, 3))
    assert fpt_bound(g.flat) == breakpoint_count(g) + 1 == oracle_distance(g)


def test_fpt_literal_tree_exceeds_4b_arity():
    stats = FptStats()
    sort_unsigned_fpt(genome_from_unsigned_perm((2, 1, 3)), stats=stats, cut_end_strip=True)
    assert stats.arity_violations and stats.arity_violations[0][1:] == (5, 1)
    stats = FptStats()
    sort_unsigned_fpt(genome_from_unsigned_perm((2, 1, 3)), stats=stats)
    assert not stats.arity_violations


def test_fpt_from_non_linear_genome():
    # path 0-3 plus a loop at 1 and a loop at 2
    g = UnsignedGenome(2, ((0, 3), (1, 1), (2, 2)))
    s = sort_unsigned_fpt(g)
    assert verify_scenario(g, s)
    assert s.length == oracle_distance(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_fpt_matches_oracle_on_random(n, seed):
    g = gen_random(n, "unsigned", seed)
    assert sort_unsigned_fpt(g).length == oracle_distance(g)


def test_verify_scenario_reports_bad_steps():
    g = genome_from_unsigned_perm((2, 1))
    good = sort_unsigned_approx(g)
    assert verify_scenario(g, good)
    r = verify_scenario(g, [((1, 2), (1, 3))])
    assert not r and r.step == 0
    r = verify_scenario(gen_tight_family(2), list(sort_unsigned_fpt(gen_tight_family(2)).moves)[:-1])
    assert not r and r.step == 5 and "identity" in r.reason
    r = verify_scenario(g, [PrefixDcj((0, 2), (1, 3), STRAIGHT), PrefixDcj((0, 2), (1, 3), STRAIGHT)])
    assert not r and r.step == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10**6), st.integers(0, 5))
def test_solvers_work_from_any_reachable_state(n, seed, k):
    g = gen_random(n, "unsigned", seed)
    for i in range(k):
        e = g.edges[1 + (seed + i) % n]
        g = apply_prefix_dcj(g, PrefixDcj(g.edges[0], e, STRAIGHT))
    s = sort_unsigned_approx(g)
    assert verify_scenario(g, s)
    assert s.length <= math.ceil(1.5 * breakpoint_count(g))
