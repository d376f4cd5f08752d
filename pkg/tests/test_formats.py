import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdcj.formats import (
    ParseError,
    format_genome,
    format_move,
    format_scenario,
    parse_genome,
    parse_scenario,
)
from pdcj.generators import gen_random, gen_tight_family
from pdcj.genome import (
    CROSSED,
    PrefixDcj,
    UnsignedGenome,
    genome_from_unsigned_perm,
    signed_genome_from_perm,
)
from pdcj.solvers import sort_signed_exact, sort_unsigned_approx, verify_scenario


def test_parse_perm_with_comments():
    kind, g = parse_genome("# a comment\nkind=unsigned-perm n=5  # trailing\n\nperm: 3 2 5 4 1\n")
    assert kind == "unsigned-perm"
    assert g == genome_from_unsigned_perm((3, 2, 5, 4, 1))


def test_parse_signed_perm():
    kind, g = parse_genome("kind=signed-perm n=3\nperm: -1 3 -2\n")
    assert kind == "signed-perm"
    assert g == signed_genome_from_perm((-1, 3, -2))


def test_parse_genome_edges():
    text = "kind=unsigned-genome n=3\nedge: 0 4\nedge: 1 2\nedge: 2 1\nedge: 3 3\n"
    kind, g = parse_genome(text)
    assert g == UnsignedGenome(3, ((0, 4), (1, 2), (1, 2), (3, 3)))
    assert parse_genome(format_genome(g))[1] == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("kind=circular n=3\nperm: 1 2 3\n", 1),
        ("kind=unsigned-perm\nperm: 1 2 3\n", 1),
        ("kind=unsigned-perm n=3\nperm: 1 2\n", 2),
        ("kind=unsigned-perm n=3\nperm: 1 2 x\n", 2),
        ("kind=unsigned-perm n=3\nperm: 1 1 3\n", 2),
        ("kind=unsigned-perm n=3\nperm: -1 2 3\n", 2),
        ("kind=unsigned-perm n=3\n# note\nvalues: 1 2 3\n", 3),
        ("kind=unsigned-genome n=2\nedge: 0 1\nedge: 1 2\nedge: 2 9\n", 4),
        ("kind=unsigned-genome n=2\nedge: 0 1\nedge: 1 2\n", 3),
        ("kind=unsigned-genome n=2\nedge: 0 1\nedge: 1 1\nedge: 2 3\n", 4),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_genome(text)
    assert info.value.line == line


def test_format_move_normalises_crossed_joins():
    m = PrefixDcj((0, 1), (2, 4), CROSSED)
    assert format_move(m) == "dcj cut (0,1) (4,2) join (0,4) (1,2)"


def test_scenario_round_trip():
    g = gen_tight_family(2)
    s = sort_unsigned_approx(g)
    text = format_scenario(s)
    assert text.splitlines()[0] == "scenario kind=unsigned n=8 length=6"
    kind, n, moves = parse_scenario(text)
    assert (kind, n) == ("unsigned", 8)
    assert verify_scenario(g, moves)
    assert [m.kind for m in moves] == [m.kind for m in s.moves]


def test_scenario_parse_errors():
    with pytest.raises(ParseError):
        parse_scenario("scenario kind=unsigned n=2 length=1\n")
    with pytest.raises(ParseError) as info:
        parse_scenario("scenario kind=unsigned n=2 length=1\ndcj cut (0,1) (2,3) join (0,3) (1,2)\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_scenario("scenario kind=unsigned n=2 length=1\ndcj cut (0,1) (2,3) join (0,2) (1,3) kind=shuffle\n")
    with pytest.raises(ParseError):
        parse_scenario("genome kind=unsigned n=2 length=0\n")


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6), st.sampled_from(["signed", "unsigned"]))
def test_genome_round_trip(n, seed, kind):
    g = gen_random(n, kind, seed)
    assert parse_genome(format_genome(g))[1] == g
    if kind == "unsigned":
        assert parse_genome(format_genome(g, as_edges=True))[1] == g


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10**6))
def test_signed_scenario_round_trip(n, seed):
    g = gen_random(n, "signed", seed)
    kind, _, moves = parse_scenario(format_scenario(sort_signed_exact(g)))
    assert kind == "signed"
    assert verify_scenario(g, moves)
