import pytest
from hypothesis import given, settings, strategies as st

from vincular.matcher import (LARGEST, POSITION, SMALLEST, RoleConstraint, SuffixMatcher, contains,
                              count_occurrences, find_occurrences, find_role_occurrences,
                              instances, naive_occurrences)
from vincular.words import Pattern, all_patterns, compositions, parse_pattern

PATTERNS = [p for m in (1, 2, 3, 4) for t in compositions(m) for p in all_patterns(m, t)]


def test_small_example():
    w = (1, 3, 2, 4, 2)
    p = parse_pattern("13-2")
    assert [o.indices for o in find_occurrences(w, p)] == [(0, 1, 2), (0, 1, 4)]
    assert count_occurrences(w, p) == 2
    occ = find_occurrences(w, p)[1]
    assert occ.letters == (1, 3, 2)
    assert occ.start == 0 and occ.smallest == 1 and occ.largest == 3
    assert occ.at(3) == 2 and occ.index_of(3) == 4


def test_adjacency_is_enforced():
    # 1 and 3 are not adjacent, so 13-2 does not occur, but 1-3-2 does
    w = (1, 2, 3, 2)
    assert not contains(w, parse_pattern("13-2"))
    assert contains(w, parse_pattern("1-3-2"))


def test_role_occurrences():
    w = (1, 3, 2, 4, 2)
    p = parse_pattern("13-2")
    assert len(find_role_occurrences(w, p, RoleConstraint(LARGEST, 3))) == 2
    assert find_role_occurrences(w, p, RoleConstraint(LARGEST, 4)) == []
    assert len(find_role_occurrences(w, p, RoleConstraint(SMALLEST, 1))) == 2
    assert len(find_role_occurrences(w, p, RoleConstraint(POSITION, 2, position=3))) == 2
    with pytest.raises(ValueError):
        find_role_occurrences(w, p, RoleConstraint(POSITION, 2, position=4))


def test_instances():
    assert instances(parse_pattern("12"), 3) == {(1, 2), (1, 3), (2, 3)}
    assert instances(parse_pattern("11-2"), 2) == {(1, 1, 2)}
    assert instances(parse_pattern("123"), 2) == frozenset()


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(PATTERNS), st.lists(st.integers(1, 4), max_size=9))
def test_matches_naive_oracle(p, w):
    got = [o.indices for o in find_occurrences(w, p)]
    assert got == naive_occurrences(w, p)
    assert got == sorted(got)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(PATTERNS), st.lists(st.integers(1, 4), min_size=1, max_size=9))
def test_suffix_matcher_agrees_with_full_search(p, w):
    ends = SuffixMatcher(p, 4)
    expected = any(o.indices[-1] == len(w) - 1 for o in find_occurrences(w, p))
    assert ends(w) == expected


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(PATTERNS), st.lists(st.integers(1, 4), max_size=8))
def test_containment_is_monotone_in_prefixes(p, w):
    if contains(w[:-1], p):
        assert contains(w, p)
