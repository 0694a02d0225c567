"""Occurrences of vincular patterns in words.

A pattern is matched block by block: each block between dashes must be
a factor of the word, later blocks start strictly after earlier ones end
(they may abut), and the concatenated letters must reduce to the pattern.
Occurrences are reported 0-based and in lexicographic order of their
index tuples, which is what "leftmost" and "rightmost" mean throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from .words import Pattern, reduce

SMALLEST = "smallest"
LARGEST = "largest"
POSITION = "position"


@dataclass(frozen=True)
class Occurrence:
    indices: Tuple[int, ...]
    letters: Tuple[int, ...]

    @property
    def start(self) -> int:
        return self.indices[0]

    @property
    def smallest(self) -> int:
        return min(self.letters)

    @property
    def largest(self) -> int:
        return max(self.letters)

    def at(self, p: int) -> int:
        """Word letter playing pattern position p (1-based)."""
        return self.letters[p - 1]

    def index_of(self, p: int) -> int:
        return self.indices[p - 1]


@dataclass(frozen=True)
class RoleConstraint:
    """Selects occurrences whose ``role`` is realized by the letter ``value``.

    ``role`` is ``"smallest"``, ``"largest"`` or ``"position"``; for the
    latter ``position`` is the 1-based pattern position.
    """

    role: str
    value: int
    position: Optional[int] = None

    def letter(self, occ: Occurrence) -> int:
        if self.role == SMALLEST:
            return occ.smallest
        if self.role == LARGEST:
            return occ.largest
        return occ.at(self.position)

    def validate(self, p: Pattern) -> None:
        if self.role not in (SMALLEST, LARGEST, POSITION):
            raise ValueError(f"unknown role {self.role!r}")
        if self.role == POSITION and not (
            self.position is not None and 1 <= self.position <= len(p)
        ):
            raise ValueError(f"position {self.position} outside [1, {len(p)}]")


@lru_cache(maxsize=None)
def instances(p: Pattern, k: int) -> frozenset:
    """All tuples over [k] that reduce to the letters of ``p``."""
    ell = p.size
    out = set()
    for values in combinations(range(1, k + 1), ell):
        out.add(tuple(values[v - 1] for v in p.letters))
    return frozenset(out)


@lru_cache(maxsize=None)
def _instance_prefixes(p: Pattern, k: int) -> Tuple[frozenset, ...]:
    """For each block j, the letter tuples of blocks 0..j that extend to an instance."""
    inst = instances(p, k)
    cuts, total = [], 0
    for b in p.type:
        total += b
        cuts.append(total)
    return tuple(frozenset(t[:c] for t in inst) for c in cuts)


def _block_starts(n: int, lengths: Sequence[int], first: int = 0) -> Iterator[Tuple[int, ...]]:
    if not lengths:
        yield ()
        return
    need = sum(lengths)
    head, rest = lengths[0], lengths[1:]
    for s in range(first, n - need + 1):
        for tail in _block_starts(n, rest, s + head):
            yield (s,) + tail


def _indices(starts: Sequence[int], lengths: Sequence[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for s, b in zip(starts, lengths):
        out.extend(range(s, s + b))
    return tuple(out)


def iter_occurrences(w: Sequence[int], p: Pattern) -> Iterator[Occurrence]:
    """Occurrences in lexicographic order of their index tuples."""
    if len(w) < len(p):
        return
    lengths = p.type
    prefixes = _instance_prefixes(p, max(w))
    w = tuple(w)
    n = len(w)
    need = [sum(lengths[j:]) for j in range(len(lengths) + 1)]

    def extend(j, first, idx, letters):
        if j == len(lengths):
            yield Occurrence(idx, letters)
            return
        b = lengths[j]
        ok = prefixes[j]
        for s in range(first, n - need[j] + 1):
            more = letters + w[s:s + b]
            if more in ok:
                yield from extend(j + 1, s + b, idx + tuple(range(s, s + b)), more)

    yield from extend(0, 0, (), ())


def find_occurrences(w: Sequence[int], p: Pattern) -> List[Occurrence]:
    return list(iter_occurrences(w, p))


def contains(w: Sequence[int], p: Pattern) -> bool:
    for _ in iter_occurrences(w, p):
        return True
    return False


def count_occurrences(w: Sequence[int], p: Pattern) -> int:
    return sum(1 for _ in iter_occurrences(w, p))


def find_role_occurrences(w: Sequence[int], p: Pattern, c: RoleConstraint) -> List[Occurrence]:
    c.validate(p)
    return [occ for occ in iter_occurrences(w, p) if c.letter(occ) == c.value]


def naive_occurrences(w: Sequence[int], p: Pattern) -> List[Tuple[int, ...]]:
    """Index tuples by trying every increasing tuple; a test oracle."""
    m = len(p)
    out = []
    for idx in combinations(range(len(w)), m):
        if all(idx[j] - idx[j - 1] == 1 for j in p.adjacencies):
            if reduce([w[i] for i in idx]) == p.letters:
                out.append(idx)
    return out


class SuffixMatcher:
    """Decides whether a word has an occurrence of ``p`` ending at its last letter.

    This is the only check needed when words are grown one letter at a
    time from an avoiding prefix.
    """

    def __init__(self, p: Pattern, k: int):
        self.pattern = p
        self.k = k
        self.lengths = p.type
        self.instances = instances(p, k)
        self.last = self.lengths[-1]
        self.head = self.lengths[:-1]
        self.head_len = sum(self.head)

    def __call__(self, w: Sequence[int]) -> bool:
        n = len(w)
        last = self.last
        if n < self.head_len + last:
            return False
        tail = tuple(w[n - last:])
        inst = self.instances
        if not self.head:
            return tail in inst
        if len(self.head) == 1:
            a = self.head[0]
            for s in range(0, n - last - a + 1):
                if tuple(w[s:s + a]) + tail in inst:
                    return True
            return False
        for starts in _block_starts(n - last, self.head):
            letters = tuple(w[i] for i in _indices(starts, self.head)) + tail
            if letters in inst:
                return True
        return False
