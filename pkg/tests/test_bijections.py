from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from vincular.bijections import (IDENTITY, INVERSE, REVERSAL, THM33_MAPS, DomainError,
                                 StringRewriter, check_rewriter, governed_strings, thm21_map,
                                 thm21_patterns, thm25_map, thm25_patterns)
from vincular.checks import EXAMPLE_21, EXAMPLE_25, EXAMPLE_33, check_bijection, _bijection_maps
from vincular.enumeration import iter_avoiders
from vincular.matcher import contains
from vincular.words import format_word, parse_pattern, parse_word

TAU, RHO = parse_pattern("12"), parse_pattern("21")


def test_pattern_builders():
    a, b = thm21_patterns(TAU, RHO, parse_pattern("123"))
    assert (str(a), str(b)) == ("12-345", "21-345")
    a, b = thm25_patterns(parse_pattern("11"))
    assert (str(a), str(b)) == ("11-12", "11-21")


def test_governing_block_example():
    e = EXAMPLE_21
    w = parse_word(e["input"])
    out = thm21_map(w, TAU, RHO, parse_pattern(e["sigma"]), e["k"])
    assert format_word(out) == e["output"]
    assert thm21_map(out, TAU, RHO, parse_pattern(e["sigma"]), e["k"], direction=INVERSE) == w


def test_governed_strings_of_example():
    w = parse_word(EXAMPLE_21["input"])
    spans = governed_strings(w, 2, parse_pattern("123"))
    assert [format_word(w[a:b]) for a, b, _ in spans] == ["431", "32", "332", "21", "21"]


def test_run_migration_example_stages():
    e = EXAMPLE_25
    trace = []
    out = thm25_map(parse_word(e["input"]), parse_pattern(e["sigma"]), e["k"], trace=trace)
    assert [format_word(s) for s in trace] == e["stages"]
    assert format_word(out) == e["stages"][-1]


def test_interchange_example_stages():
    e = EXAMPLE_33
    w = parse_word(e["input"])
    fn, src, _ = THM33_MAPS["3.3a"]
    # the worked input contains 134-2, so the domain check rejects it
    with pytest.raises(DomainError) as info:
        fn(w, e["k"])
    assert info.value.occurrence.indices == (10, 11, 12, 14)
    trace = []
    fn(w, e["k"], check=False, trace=trace)
    assert [format_word(s) for s in trace] == e["stages"]


@pytest.mark.parametrize("m", _bijection_maps(), ids=lambda m: m[0])
def test_maps_are_bijections_on_small_words(m):
    res = check_bijection(*m, 6, 4)
    assert res.passed, res.detail


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(sorted(THM33_MAPS)), st.integers(4, 6), st.data())
def test_interchange_maps_on_random_avoiders(tag, k, data):
    fn, src, tgt = THM33_MAPS[tag]
    w = tuple(data.draw(st.lists(st.integers(1, k), max_size=12)))
    if contains(w, src):
        with pytest.raises(DomainError):
            fn(w, k)
        return
    v = fn(w, k)
    assert not contains(v, tgt)
    assert Counter(v) == Counter(w)
    assert fn(v, k, INVERSE) == w


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(["1", "11", "12", "21", "121"]), st.integers(1, 6), st.data())
def test_run_migration_on_random_avoiders(s, k, data):
    sigma = parse_pattern(s)
    src, tgt = thm25_patterns(sigma)
    w = tuple(data.draw(st.lists(st.integers(1, k), max_size=12)))
    if contains(w, src):
        return
    trace = []
    v = thm25_map(w, sigma, k, trace=trace)
    assert len(trace) <= k
    assert not contains(v, tgt) and Counter(v) == Counter(w)
    assert thm25_map(v, sigma, k, INVERSE) == w


def test_domain_errors():
    sigma = parse_pattern("1")
    with pytest.raises(DomainError):
        thm25_map((1, 1, 2), sigma, 2)
    with pytest.raises(DomainError):
        thm21_map((1, 2, 3), TAU, RHO, sigma, 3)
    with pytest.raises(DomainError):
        thm21_map((1,), TAU, RHO, parse_pattern("132"), 3)
    with pytest.raises(ValueError):
        thm25_map((1,), sigma, 2, direction="sideways")


def test_rewriters():
    check_rewriter(REVERSAL, TAU, RHO, 4)
    broken = StringRewriter("drop", lambda w, m: tuple(w[1:]), lambda w, m: tuple(w))
    with pytest.raises(ValueError):
        check_rewriter(broken, TAU, RHO, 3)
    with pytest.raises(ValueError):
        check_rewriter(IDENTITY, TAU, RHO, 3)
