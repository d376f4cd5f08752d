import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdcj.breakpoint_graph import (
    AlternatingCycle,
    DecompositionError,
    DecompositionLimitError,
    UnsignedBreakpointGraph,
    build_signed_bg,
    build_unsigned_bg,
    enumerate_decompositions,
    lb_signed_prefix_dcj,
    lb_unsigned_prefix_dcj,
    lb_vs_breakpoints,
    optimal_counts,
    optimal_decomposition,
    perm_cycle_structure,
    prefix_exchange_distance,
    signed_report,
    unsigned_report,
)
from pdcj.generators import gen_gap_family, gen_tight_family
from pdcj.genome import (
    STRAIGHT,
    PrefixDcj,
    apply_prefix_dcj,
    breakpoint_count,
    genome_from_unsigned_perm,
    identity_signed,
    identity_unsigned,
    signed_genome_from_perm,
)
from pdcj.solvers import verify_scenario

P32541 = genome_from_unsigned_perm((3, 2, 5, 4, 1))


def test_signed_bg_example():
    bg = build_signed_bg(signed_genome_from_perm((-1, 4, -3, -2, 5)))
    assert (bg.c, bg.c1) == (3, 2)
    long = [cy for cy in bg.decomposition.cycles if not cy.trivial]
    assert len(long) == 1 and long[0].length == 4
    assert sorted(long[0].vertices) == [0, 1, 2, 3, 6, 7, 8, 9]
    trivial = sorted(tuple(cy.black_edges()) for cy in bg.decomposition.cycles if cy.trivial)
    assert trivial == [((4, 5),), ((10, 11),)]


def test_signed_bg_identity_and_single():
    bg = build_signed_bg(identity_signed(4))
    assert bg.c == bg.c1 == 5
    bg = build_signed_bg(signed_genome_from_perm((-1,)))
    assert (bg.c, bg.c1) == (1, 0)


def test_signed_lower_bound_examples():
    assert lb_signed_prefix_dcj(identity_signed(3)) == 0
    assert lb_signed_prefix_dcj(signed_genome_from_perm((-1,))) == 1
    assert lb_signed_prefix_dcj(signed_genome_from_perm((-1, 4, -3, -2, 5))) == 3


def test_unsigned_bg_degrees():
    bg = build_unsigned_bg(P32541)
    assert bg.grey == tuple((i, i + 1) for i in range(6))
    bg = build_unsigned_bg(identity_unsigned(3))
    assert bg.black == bg.grey
    with pytest.raises(DecompositionError):
        optimal_decomposition(UnsignedBreakpointGraph(2, ((0, 2), (1, 2), (1, 2)), ((0, 1), (1, 2), (2, 3))))


def test_optimal_decomposition_example():
    d = optimal_decomposition(build_unsigned_bg(P32541))
    assert (d.c, d.c1) == (3, 2)
    long = [cy for cy in d.cycles if not cy.trivial]
    assert len(long) == 1 and long[0].length == 4
    used_black = sorted(e for cy in d.cycles for e in cy.black_edges())
    assert used_black == sorted(P32541.edges)
    used_grey = sorted(e for cy in d.cycles for e in cy.grey_edges())
    assert used_grey == [(i, i + 1) for i in range(6)]


def test_optimal_decomposition_identity_and_gap():
    d = optimal_decomposition(build_unsigned_bg(identity_unsigned(5)))
    assert d.c == d.c1 == 6
    d = optimal_decomposition(build_unsigned_bg(gen_gap_family(2)))
    assert (d.c, d.c1) == (5, 3)
    assert optimal_counts(gen_gap_family(2)) == (5, 3)


def test_tight_family_graph():
    g = gen_tight_family(4)
    d = optimal_decomposition(build_unsigned_bg(g))
    assert (d.c, d.c1) == (13, 9)
    assert sorted(cy.length for cy in d.cycles if not cy.trivial) == [2, 2, 2, 2]


def test_enumeration_agrees_on_example():
    bg = build_unsigned_bg(P32541)
    every = enumerate_decompositions(bg)
    best = optimal_decomposition(bg)
    assert min(d.score for d in every) == best.score
    assert best.canonical() in {d.canonical() for d in every}


def test_identity_enumeration_counts_closed_trails():
    # each inner vertex may pair its two black ends with its two grey ends either way
    for n in range(1, 5):
        every = enumerate_decompositions(build_unsigned_bg(identity_unsigned(n)))
        assert len(every) == 2**n
        assert sum(1 for d in every if d.c1 == n + 1) == 1


def test_enumeration_limit():
    with pytest.raises(DecompositionLimitError):
        enumerate_decompositions(build_unsigned_bg(identity_unsigned(6)), limit=10)


def test_cycle_canonical_form():
    a = AlternatingCycle((0, 3, 4, 1, 2, 5, 6, 1))
    b = AlternatingCycle((2, 5, 6, 1, 0, 3, 4, 1))
    assert a.canonical() == b.canonical()
    assert a.length == 4 and not a.trivial


def test_perm_cycle_structure_examples():
    assert (perm_cycle_structure((1, 2, 3, 4)).c, perm_cycle_structure((1, 2, 3, 4)).c1) == (4, 4)
    s = perm_cycle_structure((2, 1, 3))
    assert (s.c, s.c1) == (2, 1)
    s = perm_cycle_structure((2, 3, 1))
    assert (s.c, s.c1) == (1, 0)


def test_prefix_exchange_examples():
    assert prefix_exchange_distance((1, 2, 3)) == 0
    assert prefix_exchange_distance((2, 1, 3)) == 1
    assert prefix_exchange_distance((1, 3, 2)) == 3


def test_unsigned_lower_bound_examples():
    assert lb_unsigned_prefix_dcj(P32541) == 3
    for p in range(2, 6):
        assert lb_unsigned_prefix_dcj(gen_gap_family(p)) == 6 * p
        assert lb_unsigned_prefix_dcj(gen_tight_family(p)) == 3 * p


def test_lb_vs_breakpoints_examples():
    r = lb_vs_breakpoints(gen_gap_family(2))
    assert (r.lb, r.b, r.gap) == (12, 10, 2)
    r = lb_vs_breakpoints(identity_unsigned(4))
    assert (r.lb, r.b, r.gap) == (0, 0, 0)
    r = lb_vs_breakpoints(P32541)
    assert (r.lb, r.b, r.gap) == (3, 3, 0)


def test_report_lines():
    assert unsigned_report(P32541).line() == "lb=3 c=3 c1=2 b=3 first_edge_is_01=false"
    assert unsigned_report(identity_unsigned(2)).line() == "lb=0 c=3 c1=3 b=0 first_edge_is_01=true"
    assert signed_report(identity_signed(2)).line().startswith("lb=0 ")


def test_unsigned_bound_exceeds_distance_on_132():
    """The cycle-count bound claims 3 moves for 1 3 2, yet two suffice."""
    g = genome_from_unsigned_perm((1, 3, 2))
    assert lb_unsigned_prefix_dcj(g) == 3
    moves = [PrefixDcj((0, 1), (4, 2), STRAIGHT), PrefixDcj((0, 4), (1, 3), STRAIGHT)]
    assert verify_scenario(g, moves)


# ----------------------------------------------------------------------------
# properties


@st.composite
def reachable_genomes(draw):
    n = draw(st.integers(1, 9))
    g = genome_from_unsigned_perm(draw(st.permutations(list(range(1, n + 1)))))
    for _ in range(draw(st.integers(0, 6))):
        e = g.edges[draw(st.integers(1, n))]
        if draw(st.booleans()):
            e = e[::-1]
        g = apply_prefix_dcj(g, PrefixDcj(g.edges[0], e, STRAIGHT))
    return g


@settings(max_examples=300, deadline=None)
@given(reachable_genomes())
def test_lb_at_least_breakpoints(g):
    assert lb_unsigned_prefix_dcj(g) >= breakpoint_count(g)


@settings(max_examples=200, deadline=None)
@given(reachable_genomes())
def test_decomposition_uses_every_edge_once(g):
    d = optimal_decomposition(build_unsigned_bg(g))
    assert sorted(e for cy in d.cycles for e in cy.black_edges()) == sorted(g.edges)
    assert sorted(e for cy in d.cycles for e in cy.grey_edges()) == [(i, i + 1) for i in range(g.n + 1)]
    assert (d.c, d.c1) == optimal_counts(g)


@settings(max_examples=200, deadline=None)
@given(reachable_genomes())
def test_adjacencies_equal_trivial_cycles(g):
    # the edge at 0 is never a breakpoint, and a trivial cycle only when it is {0,1}
    _, c1 = optimal_counts(g)
    at_zero = 0 if g.edges[0] == (0, 1) else 1
    assert g.n + 1 == breakpoint_count(g) + c1 + at_zero


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1)))), st.data())
def test_signed_move_changes_cycles_by_at_most_one(values, data):
    signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=len(values), max_size=len(values)))
    g = signed_genome_from_perm([s * v for s, v in zip(signs, values)])
    e = g.edges[data.draw(st.integers(1, g.n))]
    if data.draw(st.booleans()):
        e = e[::-1]
    h = apply_prefix_dcj(g, PrefixDcj(g.edges[0], e, STRAIGHT))
    assert abs(build_signed_bg(h).c - build_signed_bg(g).c) <= 1


def test_signed_decomposition_matches_brute_force():
    for p in itertools.product((1, -1), repeat=3):
        for perm in itertools.permutations((1, 2, 3)):
            g = signed_genome_from_perm([s * v for s, v in zip(p, perm)])
            bg = build_signed_bg(g)
            # brute force: connected components of black + grey edges
            parent = list(range(8))

            def find(x):
                while parent[x] != x:
                    x = parent[x]
                return x

            for u, v in list(g.edges) + [(2 * i, 2 * i + 1) for i in range(4)]:
                parent[find(u)] = find(v)
            assert bg.c == len({find(x) for x in range(8)})
