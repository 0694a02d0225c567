"""Words over [k], vincular patterns, and their textual dash notation.

Words are plain tuples of positive ints; the alphabet size travels
separately wherever it matters (complement, enumeration).  A pattern is
a reduced word together with its adjacency set.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence, Tuple, Union

Word = Tuple[int, ...]


class PatternError(ValueError):
    """Malformed or invalid pattern."""


class PatternParseError(PatternError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse pattern {text!r} at position {position}: {reason}")


def reduce(w: Sequence[int]) -> Word:
    """Relabel the i-th smallest letter of ``w`` as i."""
    rank = {v: i for i, v in enumerate(sorted(set(w)), start=1)}
    return tuple(rank[v] for v in w)


def is_reduced(w: Sequence[int]) -> bool:
    return set(w) == set(range(1, len(set(w)) + 1))


def alphabet_size(w: Sequence[int]) -> int:
    """Number of distinct letters (the alphabet size of ``reduce(w)``)."""
    return len(set(w))


def parse_word(text: str) -> Word:
    """Read ``"3656"`` (k <= 9) or ``"3,10,2"``; a lone letter above 9 is ``"10,"``."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = text[:-1].split(",") if text.endswith(",") else text.split(",")
    else:
        parts = list(text)
    try:
        w = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"not a word: {text!r}") from None
    if any(v < 1 for v in w):
        raise ValueError(f"letters must be positive: {text!r}")
    return w


def format_word(w: Sequence[int]) -> str:
    if any(v > 9 for v in w):
        return ",".join(map(str, w)) + ("," if len(w) == 1 else "")
    return "".join(map(str, w))


def check_word(w: Sequence[int], k: int) -> None:
    bad = [v for v in w if not 1 <= v <= k]
    if bad:
        raise ValueError(f"letter {bad[0]} outside alphabet [1, {k}]")


@dataclass(frozen=True)
class Pattern:
    """A vincular pattern ``(letters, X)``.

    ``adjacencies`` holds the 1-based positions j for which the j-th and
    (j+1)-th letters of an occurrence must sit next to each other.
    """

    letters: Tuple[int, ...]
    adjacencies: frozenset = frozenset()

    def __post_init__(self):
        letters = tuple(int(v) for v in self.letters)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "adjacencies", frozenset(self.adjacencies))
        if not letters:
            raise PatternError("pattern must be non-empty")
        if min(letters) < 1 or not is_reduced(letters):
            raise PatternError(f"letters {letters} do not form a reduced word")
        m = len(letters)
        for j in self.adjacencies:
            if not 1 <= j <= m - 1:
                raise PatternError(f"adjacency position {j} outside [1, {m - 1}]")

    @classmethod
    def subword(cls, letters: Iterable[int]) -> "Pattern":
        letters = tuple(letters)
        return cls(letters, frozenset(range(1, len(letters))))

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]]) -> "Pattern":
        letters, adj, pos = [], set(), 0
        for block in blocks:
            for i, v in enumerate(block):
                pos += 1
                letters.append(v)
                if i < len(block) - 1:
                    adj.add(pos)
        return cls(tuple(letters), frozenset(adj))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_pattern(self)

    @property
    def size(self) -> int:
        """Number of distinct letters (the largest letter)."""
        return max(self.letters)

    @cached_property
    def type(self) -> Tuple[int, ...]:
        """Block lengths between dashes, e.g. (3, 1) for ``132-4``."""
        return tuple(len(b) for b in self.blocks)

    @cached_property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        out, cur = [], [self.letters[0]]
        for j in range(1, len(self.letters)):
            if j in self.adjacencies:
                cur.append(self.letters[j])
            else:
                out.append(tuple(cur))
                cur = [self.letters[j]]
        out.append(tuple(cur))
        return tuple(out)

    @property
    def is_subword(self) -> bool:
        return len(self.adjacencies) == len(self.letters) - 1

    def shift(self, s: int) -> Tuple[int, ...]:
        """Letters with ``s`` added to each (the word ``sigma + s``)."""
        return tuple(v + s for v in self.letters)


def parse_pattern(text: str) -> Pattern:
    """Parse dash notation: ``"1-34-2"`` is ``(1342, {2})``."""
    if not text:
        raise PatternParseError(text, 0, "empty pattern")
    letters, adj = [], set()
    prev_dash = True
    for pos, ch in enumerate(text):
        if ch == "-":
            if prev_dash:
                what = "leading dash" if pos == 0 else "double dash"
                raise PatternParseError(text, pos, what)
            prev_dash = True
        elif "1" <= ch <= "9":
            if letters and not prev_dash:
                adj.add(len(letters))
            letters.append(int(ch))
            prev_dash = False
        else:
            raise PatternParseError(text, pos, f"unexpected character {ch!r}")
    if prev_dash:
        raise PatternParseError(text, len(text) - 1, "trailing dash")
    return Pattern(tuple(letters), frozenset(adj))


def format_pattern(p: Pattern) -> str:
    if p.size > 9:
        raise PatternError("dash notation only covers letters 1-9")
    return "-".join("".join(map(str, b)) for b in p.blocks)


def as_pattern(p: Union[Pattern, str]) -> Pattern:
    return p if isinstance(p, Pattern) else parse_pattern(p)


def reverse(x):
    """Reverse a word, or a pattern together with its dashes."""
    if isinstance(x, Pattern):
        m = len(x)
        return Pattern(x.letters[::-1], frozenset(m - j for j in x.adjacencies))
    return tuple(x)[::-1]


def complement(x, k: int = None):
    """Complement a word over [k], or a pattern over its own alphabet."""
    if isinstance(x, Pattern):
        top = x.size + 1
        return Pattern(tuple(top - v for v in x.letters), x.adjacencies)
    if k is None:
        raise TypeError("complementing a word needs the alphabet size k")
    return tuple(k + 1 - v for v in x)


def symmetry_orbit(p: Pattern) -> frozenset:
    """``{p, p^r, p^c, p^rc}``."""
    r = reverse(p)
    return frozenset({p, r, complement(p), complement(r)})


def reduced_words(m: int):
    """All reduced words of length m (each letter of [l] used, any l)."""
    for ell in range(1, m + 1):
        for w in product(range(1, ell + 1), repeat=m):
            if len(set(w)) == ell:
                yield w


def compositions(m: int):
    """All compositions of m, in lexicographic order."""
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in compositions(m - first):
            yield (first,) + rest


def all_patterns(m: int, dash_type: Sequence[int] = None) -> list:
    """Every pattern of length m with the given block type (default: one block)."""
    if m < 1:
        raise PatternError("pattern length must be at least 1")
    dash_type = tuple(dash_type) if dash_type is not None else (m,)
    if sum(dash_type) != m or any(s < 1 for s in dash_type):
        raise PatternError(f"{dash_type} is not a composition of {m}")
    adj, pos = set(), 0
    for s in dash_type:
        adj.update(range(pos + 1, pos + s))
        pos += s
    adj = frozenset(adj)
    return sorted((Pattern(w, adj) for w in reduced_words(m)), key=lambda p: p.letters)
