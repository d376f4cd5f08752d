import pytest

from pdcj.breakpoint_graph import lb_unsigned_prefix_dcj, optimal_counts
from pdcj.generators import (
    gap_family_perm,
    gen_gap_family,
    gen_random,
    gen_tight_family,
    random_perm,
    tight_family_perm,
)
from pdcj.genome import SignedGenome, breakpoint_count, signed_genome_to_permutation
from pdcj.solvers import sort_unsigned_approx


def test_gap_family_examples():
    assert gap_family_perm(3) == (1, 3, 5, 2, 4, 6, 7, 9, 11, 8, 10, 12, 13, 15, 17, 14, 16, 18)
    g = gen_gap_family(2)
    assert (lb_unsigned_prefix_dcj(g), breakpoint_count(g)) == (12, 10)
    assert optimal_counts(g) == (5, 3)


def test_tight_family_examples():
    assert tight_family_perm(4) == (1, 2, 16, 15, 5, 6, 12, 11, 9, 10, 8, 7, 13, 14, 4, 3)
    assert breakpoint_count(gen_tight_family(2)) == 4


@pytest.mark.parametrize("p", range(2, 12))
def test_family_invariants(p):
    g = gen_gap_family(p)
    assert lb_unsigned_prefix_dcj(g) == 6 * p and breakpoint_count(g) == 5 * p
    t = gen_tight_family(p)
    assert t.n == 4 * p
    assert lb_unsigned_prefix_dcj(t) == 3 * p and breakpoint_count(t) == 2 * p
    assert sort_unsigned_approx(t).length == 3 * p


def test_bad_parameters():
    for fn in (gen_gap_family, gen_tight_family):
        with pytest.raises(ValueError):
            fn(1)
    with pytest.raises(ValueError):
        gen_random(0)
    with pytest.raises(ValueError):
        gen_random(3, "circular")


def test_random_is_deterministic():
    assert gen_random(9, "unsigned", 42) == gen_random(9, "unsigned", 42)
    assert gen_random(9, "signed", 42) == gen_random(9, "signed", 42)
    assert random_perm(9, 1) != random_perm(9, 2)


def test_random_covers_all_small_permutations():
    seen = {random_perm(5, seed) for seed in range(10_000)}
    assert len(seen) == 120


def test_random_signed_n1():
    values = {signed_genome_to_permutation(gen_random(1, "signed", s)).values for s in range(50)}
    assert values == {(1,), (-1,)}
    assert isinstance(gen_random(1, "signed", 0), SignedGenome)
