"""Exhaustive avoidance counts and the Wilf-classification engine.

Avoiders are generated depth-first: a word avoids p iff its prefix
without the last letter avoids p and no occurrence ends at the last
letter, so only avoiding prefixes are ever extended.
"""
from __future__ import annotations

import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .matcher import SuffixMatcher, contains, instances
from .words import Pattern, Word, check_word, format_pattern, symmetry_orbit

DEFAULT_GUARDRAIL = 10**8


class GuardrailError(RuntimeError):
    """A counting cell would enumerate more than the configured number of words."""

    def __init__(self, n: int, k: int, cap: int):
        self.n, self.k, self.cap = n, k, cap
        super().__init__(f"k^n = {k}^{n} exceeds the guardrail {cap}")


def guardrail() -> int:
    env = os.environ.get("VINCULAR_GUARDRAIL")
    return int(env) if env else DEFAULT_GUARDRAIL


def _check_cell(n: int, k: int, cap: Optional[int]) -> None:
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    cap = guardrail() if cap is None else cap
    if k**n > cap:
        raise GuardrailError(n, k, cap)


def _grow(word: List[int], n_max: int, k: int, ends_with, visit) -> None:
    visit(word)
    if len(word) == n_max:
        return
    for a in range(1, k + 1):
        word.append(a)
        if not ends_with(word):
            _grow(word, n_max, k, ends_with, visit)
        word.pop()


def iter_avoiders(n: int, k: int, p: Pattern, prefix: Sequence[int] = ()) -> List[Word]:
    """All words of [k]^n avoiding ``p`` that start with ``prefix``."""
    out: List[Word] = []
    if n < len(prefix) or contains(prefix, p):
        return out
    ends = SuffixMatcher(p, k)

    def visit(w):
        if len(w) == n:
            out.append(tuple(w))

    _grow(list(prefix), n, k, ends, visit)
    return out


def avoider_counts(p: Pattern, k: int, n_max: int, cap: Optional[int] = None) -> List[int]:
    """``[a_p(0,k), ..., a_p(n_max,k)]`` from a single traversal."""
    _check_cell(n_max, k, cap)
    counts = [0] * (n_max + 1)
    if k == 0:
        counts[0] = 1
        return counts
    ends = SuffixMatcher(p, k)

    def visit(w):
        counts[len(w)] += 1

    _grow([], n_max, k, ends, visit)
    return counts


def transfer_counts(p: Pattern, k: int, n_max: int) -> List[int]:
    """Avoider counts for patterns with at most two blocks, by a state DP.

    The state is the last a+b-1 letters plus the set of tails (b-tuples)
    already forbidden by head-block factors that end early enough.
    Not subject to the guardrail: cost grows with reachable states, not k^n.
    """
    blocks = p.type
    if len(blocks) > 2:
        raise ValueError("transfer_counts handles at most two blocks")
    counts = [0] * (n_max + 1)
    counts[0] = 1
    if k == 0:
        return counts
    inst = instances(p, k)
    if len(blocks) == 1:
        a, b = 0, blocks[0]
    else:
        a, b = blocks
    keep = a + b - 1
    forb: Dict[tuple, frozenset] = {}
    if a:
        heads = defaultdict(set)
        for t in inst:
            heads[t[:a]].add(t[a:])
        forb = {h: frozenset(ts) for h, ts in heads.items()}
    # a subword pattern forbids its instances outright
    base = frozenset(inst) if not a else frozenset()
    states: Dict[tuple, int] = {((), base): 1}
    for t in range(1, n_max + 1):
        nxt: Dict[tuple, int] = defaultdict(int)
        for (suffix, banned), c in states.items():
            for v in range(1, k + 1):
                w = suffix + (v,)
                if len(w) >= b and w[-b:] in banned:
                    continue
                new_banned = banned
                # head factor ending at t + 1 - b governs tails ending at t + 1
                end = t + 1 - b
                if a and end >= a:
                    off = len(w) - (t - end)
                    head = w[off - a:off]
                    extra = forb.get(head)
                    if extra:
                        new_banned = banned | extra
                nxt[w[-keep:] if keep else (), new_banned] += c
        states = nxt
        counts[t] = sum(states.values())
    return counts


def count_avoiders(n: int, k: int, p: Pattern, cap: Optional[int] = None) -> int:
    return avoider_counts(p, k, n, cap)[n]


def count_avoiders_prefix(n: int, k: int, p: Pattern, prefix: Sequence[int],
                          cap: Optional[int] = None) -> int:
    _check_cell(n, k, cap)
    check_word(prefix, k)
    if len(prefix) > n:
        raise ValueError("prefix longer than n")
    return len(iter_avoiders(n, k, p, prefix))


def first_letter_counts(p: Pattern, k: int, n_max: int,
                        cap: Optional[int] = None) -> Dict[Tuple[int, int], int]:
    """``{(n, a): a_p(n,k;a)}`` for 1 <= n <= n_max."""
    _check_cell(n_max, k, cap)
    out: Dict[Tuple[int, int], int] = defaultdict(int)
    if k == 0:
        return dict(out)
    ends = SuffixMatcher(p, k)

    def visit(w):
        if w:
            out[len(w), w[0]] += 1

    _grow([], n_max, k, ends, visit)
    return dict(out)


def content_counts(p: Pattern, k: int, n: int, cap: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    """Avoiders of length n keyed by content vector (multiplicity of 1..k)."""
    _check_cell(n, k, cap)
    out: Dict[Tuple[int, ...], int] = defaultdict(int)
    for w in iter_avoiders(n, k, p):
        c = Counter(w)
        out[tuple(c[a] for a in range(1, k + 1))] += 1
    return dict(out)


def count_avoiders_by_content(n: int, k: int, p: Pattern, content,
                              cap: Optional[int] = None) -> int:
    """Avoiders that rearrange the multiset ``content`` (letters or a Counter)."""
    _check_cell(n, k, cap)
    need = Counter(content)
    if sum(need.values()) != n:
        raise ValueError("multiset size must equal n")
    check_word(list(need), k)
    ends = SuffixMatcher(p, k)
    total = 0

    def grow(word):
        nonlocal total
        if len(word) == n:
            total += 1
            return
        for a in range(1, k + 1):
            if need[a]:
                need[a] -= 1
                word.append(a)
                if not ends(word):
                    grow(word)
                word.pop()
                need[a] += 1

    grow([])
    return total


# -- equivalence checks -------------------------------------------------------

REFINEMENTS = ("none", "first-letter", "content")


@dataclass
class EquivalenceReport:
    p: Pattern
    q: Pattern
    n_max: int
    k_max: int
    refinement: str
    cells: int = 0
    mismatches: List[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        head = f"{self.p} vs {self.q} [{self.refinement}] n<={self.n_max} k<={self.k_max}"
        if self.passed:
            return f"{head}: agree on {self.cells} cells"
        cell, a, b = self.mismatches[0]
        return f"{head}: differ at {cell}: {a} != {b}"


def verify_equivalence(p: Pattern, q: Pattern, n_max: int, k_max: int,
                       refinement: str = "none", cap: Optional[int] = None) -> EquivalenceReport:
    if refinement not in REFINEMENTS:
        raise ValueError(f"refinement must be one of {REFINEMENTS}")
    rep = EquivalenceReport(p, q, n_max, k_max, refinement)
    for k in range(0, k_max + 1):
        if refinement == "none":
            a, b = avoider_counts(p, k, n_max, cap), avoider_counts(q, k, n_max, cap)
            pairs = {(n, k): (a[n], b[n]) for n in range(n_max + 1)}
        elif refinement == "first-letter":
            a, b = first_letter_counts(p, k, n_max, cap), first_letter_counts(q, k, n_max, cap)
            pairs = {(n, k, f): (a.get((n, f), 0), b.get((n, f), 0))
                     for n in range(1, n_max + 1) for f in range(1, k + 1)}
        else:
            pairs = {}
            for n in range(n_max + 1):
                a, b = content_counts(p, k, n, cap), content_counts(q, k, n, cap)
                for c in sorted(set(a) | set(b)):
                    pairs[n, k, c] = (a.get(c, 0), b.get(c, 0))
        for cell, (x, y) in pairs.items():
            rep.cells += 1
            if x != y:
                rep.mismatches.append((cell, x, y))
    return rep


# -- classification -----------------------------------------------------------

@dataclass
class CountTable:
    pattern: Pattern
    n_max: int
    k_max: int
    entries: Dict[Tuple[int, int], int]

    def signature(self) -> Tuple[int, ...]:
        return tuple(self.entries[n, k] for k in range(self.k_max + 1) for n in range(self.n_max + 1))

    def rows(self) -> List[dict]:
        return [{"pattern": format_pattern(self.pattern), "n": n, "k": k, "count": c}
                for (n, k), c in sorted(self.entries.items(), key=lambda t: (t[0][1], t[0][0]))]


def count_table(p: Pattern, n_max: int, k_max: int, cap: Optional[int] = None) -> CountTable:
    entries = {}
    for k in range(k_max + 1):
        for n, c in enumerate(avoider_counts(p, k, n_max, cap)):
            entries[n, k] = c
    return CountTable(p, n_max, k_max, entries)


def separating_cell(a: CountTable, b: CountTable) -> Optional[Tuple[int, int]]:
    """First (n, k), by k then n, where the two tables differ."""
    for k in range(a.k_max + 1):
        for n in range(a.n_max + 1):
            if a.entries[n, k] != b.entries[n, k]:
                return n, k
    return None


@dataclass
class WilfClassification:
    universe: List[Pattern]
    n_max: int
    k_max: int
    classes: List[List[Pattern]]
    symmetry_orbits: List[List[Pattern]]
    tables: Dict[Pattern, CountTable]

    def class_of(self, p: Pattern) -> List[Pattern]:
        for c in self.classes:
            if p in c:
                return c
        raise KeyError(p)

    @property
    def singletons(self) -> List[Pattern]:
        return [c[0] for c in self.classes if len(c) == 1]

    def orbits_refine_classes(self) -> bool:
        index = {p: i for i, c in enumerate(self.classes) for p in c}
        return all(len({index[p] for p in orb}) == 1 for orb in self.symmetry_orbits)

    def reduced_classes(self) -> List[List[Pattern]]:
        """Each class cut down to one representative per symmetry orbit."""
        rep = {}
        for orb in self.symmetry_orbits:
            for p in orb:
                rep[p] = orb[0]
        out = []
        for c in self.classes:
            seen = []
            for p in c:
                if rep[p] not in seen:
                    seen.append(rep[p])
            out.append(seen)
        return out

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "k_max": self.k_max,
            "classes": [
                {"patterns": [format_pattern(p) for p in c],
                 "size": len(c),
                 "singleton": len(c) == 1,
                 "signature": list(self.tables[c[0]].signature())}
                for c in self.classes
            ],
            "symmetry_orbits": [[format_pattern(p) for p in o] for o in self.symmetry_orbits],
        }


def symmetry_orbits(universe: Sequence[Pattern]) -> List[List[Pattern]]:
    seen, out = set(), []
    for p in universe:
        if p in seen:
            continue
        orb = [q for q in universe if q in symmetry_orbit(p)]
        seen.update(orb)
        out.append(orb)
    return out


def wilf_classify(universe: Sequence[Pattern], n_max: int, k_max: int,
                  cap: Optional[int] = None, workers: int = 1) -> WilfClassification:
    """Partition ``universe`` by equality of full count signatures.

    Equal signatures only mean "not separated within (n_max, k_max)".
    """
    universe = list(universe)
    _check_cell(n_max, k_max, cap)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as ex:
            tables = list(ex.map(count_table, universe, [n_max] * len(universe),
                                 [k_max] * len(universe), [cap] * len(universe)))
        tables = dict(zip(universe, tables))
    else:
        tables = {p: count_table(p, n_max, k_max, cap) for p in universe}
    groups: Dict[tuple, List[Pattern]] = {}
    for p in universe:
        groups.setdefault(tables[p].signature(), []).append(p)
    return WilfClassification(universe, n_max, k_max, list(groups.values()),
                              symmetry_orbits(universe), tables)


def pairwise_witnesses(cls: WilfClassification) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """A separating (n, k) for every pair of distinct classes, keyed by class index."""
    out = {}
    for i, j in combinations(range(len(cls.classes)), 2):
        cell = separating_cell(cls.tables[cls.classes[i][0]], cls.tables[cls.classes[j][0]])
        out[i, j] = cell
    return out
