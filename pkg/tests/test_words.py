import pytest
from hypothesis import given, strategies as st

from vincular.words import (Pattern, PatternError, PatternParseError, all_patterns, check_word,
                            complement, compositions, format_pattern, format_word, is_reduced,
                            parse_pattern, parse_word, reduce, reduced_words, reverse,
                            symmetry_orbit)

words = st.lists(st.integers(1, 12), max_size=12).map(tuple)


def test_reduce_example():
    assert reduce((6, 9, 4, 6, 1, 4)) == (3, 4, 2, 3, 1, 2)


@given(words)
def test_reduce_is_idempotent_and_order_preserving(w):
    r = reduce(w)
    assert is_reduced(r) and reduce(r) == r
    for i in range(len(w)):
        for j in range(len(w)):
            assert (w[i] < w[j]) == (r[i] < r[j])


def test_word_round_trip():
    assert parse_word("2155") == (2, 1, 5, 5)
    assert parse_word("1,10,3") == (1, 10, 3)
    assert format_word((1, 10, 3)) == "1,10,3"
    assert format_word((1, 2)) == "12"


@given(words)
def test_word_format_parse_round_trip(w):
    assert parse_word(format_word(w)) == w


def test_check_word_rejects_big_letters():
    check_word((1, 2, 3), 3)
    with pytest.raises(ValueError):
        check_word((1, 4), 3)


def test_pattern_structure():
    p = parse_pattern("13-2")
    assert p.letters == (1, 3, 2)
    assert p.adjacencies == frozenset({1})
    assert p.type == (2, 1)
    assert p.blocks == ((1, 3), (2,))
    assert p.size == 3 and not p.is_subword
    assert parse_pattern("123").is_subword
    assert parse_pattern("1-2-3").type == (1, 1, 1)


def test_pattern_constructors_agree():
    assert Pattern.from_blocks([(1, 3), (2,)]) == parse_pattern("13-2")
    assert Pattern.subword((2, 1, 2)) == parse_pattern("212")


def test_pattern_must_be_reduced():
    with pytest.raises(PatternError):
        Pattern((1, 3))
    with pytest.raises(PatternError):
        Pattern((1, 2), frozenset({2}))


@pytest.mark.parametrize("text,position", [
    ("", 0), ("-12", 0), ("12-", 2), ("1--2", 2), ("1a2", 1), ("0-1", 0),
])
def test_parse_errors_name_the_position(text, position):
    with pytest.raises(PatternParseError) as info:
        parse_pattern(text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)


@given(st.sampled_from(all_patterns(4, (3, 1)) + all_patterns(4, (2, 2)) + all_patterns(3, (1, 2))))
def test_pattern_format_round_trip(p):
    assert parse_pattern(format_pattern(p)) == p


def test_symmetries():
    p = parse_pattern("13-2")
    assert reverse(p) == parse_pattern("2-31")
    assert complement(p) == parse_pattern("31-2")
    assert {format_pattern(q) for q in symmetry_orbit(p)} == {"13-2", "2-13", "2-31", "31-2"}
    assert reverse((1, 2, 3)) == (3, 2, 1)
    assert complement((1, 2, 3), 4) == (4, 3, 2)


@given(st.sampled_from(all_patterns(4, (3, 1)) + all_patterns(4, (2, 2))))
def test_symmetries_are_involutions(p):
    assert reverse(reverse(p)) == p
    assert complement(complement(p)) == p
    assert len(symmetry_orbit(p)) in (1, 2, 4)


def test_enumerators():
    assert len(list(reduced_words(3))) == 13
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(all_patterns(4, (3, 1))) == 75
    assert len(all_patterns(4, (2, 2))) == 75
    with pytest.raises(PatternError):
        all_patterns(4, (2, 1))
