import itertools

import pytest
from hypothesis import given, strategies as st

from triembed.designs import (
    LatinSquare,
    OrientationAssignment,
    TripleSystem,
    format_design,
    format_orientation,
    gen_cayley_latin,
    gen_sts,
    latin_from_triple_system,
    latin_to_triple_system,
    parse_design,
    parse_orientation,
    validate_latin_square,
    validate_sts,
    validate_triple_system,
)


def test_single_block_is_valid():
    assert validate_triple_system(TripleSystem(3, ((0, 1, 2),))).ok


def test_repeated_pair_fails():
    report = validate_triple_system(TripleSystem(4, ((0, 1, 2), (0, 1, 3))))
    assert not report.ok
    assert any(c.name == "pairs_at_most_once" and not c.ok for c in report.checks)


def test_disconnected_fails():
    report = validate_triple_system(TripleSystem(6, ((0, 1, 2), (3, 4, 5))))
    assert not report.ok
    assert any(c.name == "connected" and not c.ok for c in report.checks)


def test_degenerate_block_fails():
    assert not validate_triple_system(TripleSystem(3, ((0, 1, 1),))).ok
    assert not validate_triple_system(TripleSystem(3, ((0, 1, 5),))).ok


def test_sts7_pair_coverage(sts7):
    # Independent oracle: every one of the 21 pairs appears exactly once.
    counts = {}
    for blk in sts7.blocks:
        for pair in itertools.combinations(sorted(blk), 2):
            counts[pair] = counts.get(pair, 0) + 1
    assert len(counts) == 21 and set(counts.values()) == {1}
    assert validate_sts(sts7).ok


def test_fano_minus_block_is_not_sts(sts7):
    broken = TripleSystem(7, sts7.blocks[:-1])
    assert not validate_sts(broken).ok
    assert validate_triple_system(broken).ok


def test_sts3_is_sts():
    assert validate_sts(TripleSystem(3, ((0, 1, 2),))).ok


def test_gen_sts7_is_development_of_base_block():
    ts = gen_sts(7)
    assert ts.n_blocks == 7
    expected = {frozenset({i % 7, (i + 1) % 7, (i + 3) % 7}) for i in range(7)}
    assert {frozenset(b) for b in ts.blocks} == expected


@pytest.mark.parametrize("n", [3, 7, 9, 13, 15, 21])
def test_gen_sts_validates(n):
    ts = gen_sts(n)
    assert ts.n_blocks == n * (n - 1) // 6
    assert validate_sts(ts).ok


@pytest.mark.parametrize("n", [0, 2, 5, 6, 8, 11, 19])
def test_gen_sts_unsupported_orders(n):
    # 19 = 1 (mod 6) is admissible but outside the generator's constructions.
    with pytest.raises(ValueError):
        gen_sts(n)


def test_cayley_latin_3():
    ls = gen_cayley_latin(3)
    assert ls.cells == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert validate_latin_square(ls).ok


def test_cayley_latin_edges():
    assert gen_cayley_latin(1).cells == ((0,),)
    assert gen_cayley_latin(5).cells[2] == (2, 3, 4, 0, 1)
    with pytest.raises(ValueError):
        gen_cayley_latin(0)


def test_latin_to_triple_system_z3(ls3):
    ts = latin_to_triple_system(ls3)
    assert ts.n_points == 9 and ts.n_blocks == 9
    assert (0, 3, 6) in ts.blocks
    assert (0, 4, 7) in ts.blocks
    assert (1, 3, 7) in ts.blocks
    assert validate_triple_system(ts).ok


def test_latin_to_triple_system_n1():
    ts = latin_to_triple_system(gen_cayley_latin(1))
    assert ts.blocks == ((0, 1, 2),)


def test_latin_to_triple_system_rejects_bad_grid():
    bad = LatinSquare(2, ((0, 0), (1, 1)))
    with pytest.raises(ValueError):
        latin_to_triple_system(bad)


def test_latin_triple_system_is_tripartite(ls3_ts):
    n = 3
    parts = [range(n), range(n, 2 * n), range(2 * n, 3 * n)]
    pair_counts = {}
    for blk in ls3_ts.blocks:
        assert [sum(p in part for p in blk) for part in parts] == [1, 1, 1]
        for pair in itertools.combinations(sorted(blk), 2):
            pair_counts[pair] = pair_counts.get(pair, 0) + 1
    # every cross pair covered exactly once
    assert len(pair_counts) == 3 * n * n and set(pair_counts.values()) == {1}


def test_latin_round_trip_through_triples(ls3):
    assert latin_from_triple_system(latin_to_triple_system(ls3)) == ls3


def test_latin_from_triple_system_rejects_non_latin(sts7):
    assert latin_from_triple_system(sts7) is None


@pytest.mark.parametrize("n", [3, 7, 9, 13])
def test_design_file_round_trip_sts(n):
    ts = gen_sts(n)
    text = format_design(ts)
    assert text.startswith(f"sts {n}\n")
    assert parse_design(text) == ts


def test_design_file_round_trip_pts():
    pts = TripleSystem(5, ((0, 1, 2), (0, 3, 4)))
    text = format_design(pts)
    assert text.startswith("pts 5\n")
    assert parse_design(text) == pts


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_latin_file_round_trip(n):
    ls = gen_cayley_latin(n)
    assert parse_design(format_design(ls)) == ls


def test_parse_design_accepts_comments():
    text = "# a comment\nsts 3\n# another\n0 1 2\n"
    assert parse_design(text) == TripleSystem(3, ((0, 1, 2),))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "xyz 3\n0 1 2\n",
        "sts three\n0 1 2\n",
        "sts 3\n0 1\n",
        "sts 3\n0 1 x\n",
        "sts 4\n0 1 2\n",  # not an STS on 4 points
        "ls 2\n0 1\n1 0\n1 0\n",  # wrong row count
        "ls 2\n0 1\n0 1\n",  # repeated column entries
    ],
)
def test_parse_design_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_design(text)


@given(st.integers(min_value=0, max_value=2**20 - 1))
def test_orientation_round_trip(mask):
    o = OrientationAssignment.from_mask(mask, 20)
    assert parse_orientation(format_orientation(o)) == o
    assert OrientationAssignment.from_string(o.to_string()) == o


def test_orientation_rejects_other_characters():
    with pytest.raises(ValueError):
        OrientationAssignment.from_string("+-x")
    with pytest.raises(ValueError):
        parse_orientation("+-\n+-\n")


def test_orientation_constructors():
    assert OrientationAssignment.all_plus(3).to_string() == "+++"
    assert OrientationAssignment.all_minus(3).to_string() == "---"
    assert OrientationAssignment.from_mask(0b101, 3).to_string() == "+-+"
