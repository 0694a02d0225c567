from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from vincular.enumeration import (GuardrailError, avoider_counts, content_counts, count_avoiders,
                                  count_avoiders_by_content, count_avoiders_prefix,
                                  first_letter_counts, iter_avoiders, pairwise_witnesses,
                                  transfer_counts, verify_equivalence, wilf_classify)
from vincular.matcher import naive_occurrences
from vincular.words import all_patterns, compositions, parse_pattern

SMALL = [p for m in (2, 3, 4) for t in compositions(m) if len(t) <= 2 for p in all_patterns(m, t)]


def brute_force(p, n, k):
    return sum(1 for w in product(range(1, k + 1), repeat=n) if not naive_occurrences(w, p))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 5), st.integers(0, 3))
def test_counts_match_brute_force(p, n, k):
    assert count_avoiders(n, k, p) == brute_force(p, n, k)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.integers(1, 4))
def test_state_dp_matches_search(p, k):
    assert transfer_counts(p, k, 7) == avoider_counts(p, k, 7)


def test_frozen_sequences():
    p = parse_pattern("231-3")
    assert transfer_counts(p, 3, 10) == [1, 3, 9, 27, 80, 235, 686, 1994, 5779, 16715, 48279]
    assert avoider_counts(p, 4, 8) == [1, 4, 16, 64, 252, 980, 3773, 14413, 54727]
    assert count_avoiders(4, 2, parse_pattern("11-12")) == 15


def test_trivial_cells():
    assert count_avoiders(0, 4, parse_pattern("132-1")) == 1
    assert count_avoiders(3, 9, parse_pattern("1-34-2")) == 9**3
    assert count_avoiders(5, 0, parse_pattern("12")) == 0
    assert avoider_counts(parse_pattern("12"), 0, 3) == [1, 0, 0, 0]


def test_prefix_and_refinements():
    p = parse_pattern("12-1")
    n, k = 6, 3
    total = count_avoiders(n, k, p)
    fl = first_letter_counts(p, k, n)
    assert sum(fl[n, a] for a in range(1, k + 1)) == total
    assert all(fl[n, a] == count_avoiders_prefix(n, k, p, (a,)) for a in range(1, k + 1))
    cc = content_counts(p, k, n)
    assert sum(cc.values()) == total
    content = (1, 1, 2, 2, 3, 3)
    assert count_avoiders_by_content(n, k, p, content) == cc[2, 2, 2]
    with pytest.raises(ValueError):
        count_avoiders_prefix(2, 3, p, (1, 2, 3))


def test_iter_avoiders_with_prefix():
    p = parse_pattern("11")
    got = iter_avoiders(3, 2, p, prefix=(1,))
    assert got == [(1, 2, 1)]


def test_guardrail(monkeypatch):
    p = parse_pattern("12-1")
    with pytest.raises(GuardrailError):
        count_avoiders(5, 4, p, cap=100)
    monkeypatch.setenv("VINCULAR_GUARDRAIL", "10")
    with pytest.raises(GuardrailError):
        count_avoiders(3, 3, p)
    monkeypatch.delenv("VINCULAR_GUARDRAIL")
    assert count_avoiders(3, 3, p) == brute_force(p, 3, 3)


def test_verify_equivalence_reports_mismatch():
    rep = verify_equivalence(parse_pattern("11-12"), parse_pattern("11-21"), 6, 3)
    assert rep.passed and rep.cells == 4 * 7
    rep = verify_equivalence(parse_pattern("11-12"), parse_pattern("12-11"), 6, 3, "first-letter")
    assert rep.passed
    rep = verify_equivalence(parse_pattern("12-1"), parse_pattern("11-1"), 5, 3)
    assert not rep.passed
    assert "differ at" in rep.summary()
    with pytest.raises(ValueError):
        verify_equivalence(parse_pattern("1"), parse_pattern("1"), 2, 2, "bogus")


def test_strong_equivalence_by_content():
    rep = verify_equivalence(parse_pattern("11-12"), parse_pattern("11-21"), 6, 3, "content")
    assert rep.passed


def test_classification_of_subwords():
    universe = all_patterns(3)
    cls = wilf_classify(universe, 6, 4)
    assert cls.orbits_refine_classes()
    assert sum(len(c) for c in cls.classes) == 13
    assert cls.class_of(parse_pattern("111")) != cls.class_of(parse_pattern("112"))
    for cell in pairwise_witnesses(cls).values():
        assert cell is not None
    d = cls.to_dict()
    assert len(d["classes"]) == len(cls.classes)


def test_classification_in_parallel_matches_serial():
    universe = all_patterns(3, (2, 1))
    a = wilf_classify(universe, 5, 3)
    b = wilf_classify(universe, 5, 3, workers=2)
    assert [sorted(map(str, c)) for c in a.classes] == [sorted(map(str, c)) for c in b.classes]
