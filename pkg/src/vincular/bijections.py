"""Explicit bijections between avoidance classes.

Every map acts on tuples of letters and preserves length.  ``trace``
lists collect the intermediate words of the staged constructions so the
stages can be compared against hand-worked examples.
"""
from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .matcher import Occurrence, contains, find_occurrences, instances, iter_occurrences
from .words import Pattern, Word, parse_pattern

FORWARD = "forward"
INVERSE = "inverse"


class DomainError(ValueError):
    """The input word lies outside the domain of the requested map."""

    def __init__(self, message: str, occurrence: Optional[Occurrence] = None):
        self.occurrence = occurrence
        super().__init__(message)


def _require_avoids(w: Sequence[int], p: Pattern) -> None:
    for occ in iter_occurrences(w, p):
        pos = ",".join(str(i + 1) for i in occ.indices)
        raise DomainError(f"word contains {p} at positions {pos}", occ)


def _check_direction(direction: str) -> None:
    if direction not in (FORWARD, INVERSE):
        raise ValueError(f"direction must be {FORWARD!r} or {INVERSE!r}")


# -- string rewriters ---------------------------------------------------------

@dataclass(frozen=True)
class StringRewriter:
    """A length-preserving bijection on words over [m] realizing ``tau ~ rho``.

    ``forward(word, m)`` sends tau-avoiders over [m] to rho-avoiders.
    """

    name: str
    forward: Callable[[Word, int], Word]
    inverse: Callable[[Word, int], Word]


REVERSAL = StringRewriter("reversal", lambda w, m: tuple(w[::-1]), lambda w, m: tuple(w[::-1]))
IDENTITY = StringRewriter("identity", lambda w, m: tuple(w), lambda w, m: tuple(w))


def check_rewriter(g: StringRewriter, tau: Pattern, rho: Pattern, m: int,
                   samples: int = 200, max_len: int = 8, seed: int = 0) -> None:
    """Spot-check that ``g`` inverts and carries tau-avoiders to rho-avoiders."""
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(0, max_len)
        w = tuple(rng.randint(1, m) for _ in range(n))
        img = g.forward(w, m)
        if len(img) != n or g.inverse(img, m) != w:
            raise ValueError(f"rewriter {g.name} is not invertible on {w}")
        if not contains(w, tau) and contains(img, rho):
            raise ValueError(f"rewriter {g.name} sends {w} to a word containing {rho}")


# -- governing-block construction ---------------------------------------------

def _is_monotonic(letters: Sequence[int]) -> bool:
    pairs = list(zip(letters, letters[1:]))
    return all(a <= b for a, b in pairs) or all(a >= b for a, b in pairs)


@lru_cache(maxsize=None)
def thm21_patterns(tau: Pattern, rho: Pattern, sigma: Pattern) -> Tuple[Pattern, Pattern]:
    """``tau-(sigma+s)`` and ``rho-(sigma+s)`` for subwords with largest letter s."""
    s = tau.size
    return (Pattern.from_blocks([tau.letters, sigma.shift(s)]),
            Pattern.from_blocks([rho.letters, sigma.shift(s)]))


def governed_strings(w: Sequence[int], s: int, sigma: Pattern) -> List[Tuple[int, int, int]]:
    """The maximal strings rewritten by the governing-block construction.

    Returns ``(start, stop, alphabet)`` triples (0-based, stop exclusive).
    The governing occurrences of sigma are found from the b-occurrences
    with b > s: a_1 is the largest such b, l_1 its rightmost occurrence;
    then each a_j is the largest b < a_{j-1} occurring entirely to the
    right of the previous governing occurrence.
    """
    c = len(sigma)
    w = tuple(w)
    inst = instances(sigma, max(w, default=0))
    occs = [(i, min(w[i:i + c])) for i in range(len(w) - c + 1) if w[i:i + c] in inst]
    heads: List[Tuple[int, int]] = []
    lo, bound = 0, None
    while True:
        cand = [(b, i) for i, b in occs if i >= lo and b > s and (bound is None or b < bound)]
        if not cand:
            break
        a = max(b for b, _ in cand)
        ell = max(i for i, b in occs if b == a)
        heads.append((a, ell))
        lo, bound = ell + c, a
    out = []
    regions = [(0, heads[0][1], heads[0][0] - 1)] if heads else []
    for (_, ell), (a_next, ell_next) in zip(heads, heads[1:]):
        regions.append((ell + c, ell_next, a_next - 1))
    for lo, hi, m in regions:
        i = lo
        while i < hi:
            if w[i] <= m:
                j = i
                while j < hi and w[j] <= m:
                    j += 1
                out.append((i, j, m))
                i = j
            else:
                i += 1
    return out


def thm21_map(w: Sequence[int], tau: Pattern, rho: Pattern, sigma: Pattern, k: int,
              g: StringRewriter = REVERSAL, direction: str = FORWARD,
              check: bool = True) -> Word:
    """Send ``tau-(sigma+s)``-avoiders to ``rho-(sigma+s)``-avoiders (or back).

    ``g`` must realize tau ~ rho on strings; it is applied to each
    maximal string governed by a rightmost occurrence of the shifted
    sigma block, as described in :func:`governed_strings`.
    """
    _check_direction(direction)
    for name, q in (("tau", tau), ("rho", rho), ("sigma", sigma)):
        if not q.is_subword:
            raise DomainError(f"{name} = {q} must be a subword pattern")
    if tau.size != rho.size:
        raise DomainError("tau and rho must share their largest letter")
    if not _is_monotonic(sigma.letters):
        raise DomainError(f"sigma = {sigma} is not monotonic")
    w = tuple(w)
    tau2, rho2 = thm21_patterns(tau, rho, sigma)
    if check:
        _require_avoids(w, tau2 if direction == FORWARD else rho2)
    s = tau.size
    if s + sigma.size > k:
        return w
    apply = g.forward if direction == FORWARD else g.inverse
    out = list(w)
    for lo, hi, m in governed_strings(w, s, sigma):
        out[lo:hi] = apply(w[lo:hi], m)
    return tuple(out)


# -- k_i-occurrence migration -------------------------------------------------

@lru_cache(maxsize=None)
def thm25_patterns(sigma: Pattern) -> Tuple[Pattern, Pattern]:
    """``sigma-r(r+1)`` and ``sigma-(r+1)r``."""
    r = sigma.size
    return (Pattern.from_blocks([sigma.letters, (r, r + 1)]),
            Pattern.from_blocks([sigma.letters, (r + 1, r)]))


def _max_occurrences(w: Sequence[int], sigma: Pattern) -> List[Tuple[int, int]]:
    """``(start, largest letter)`` of each factor occurrence of sigma."""
    c = len(sigma)
    w = tuple(w)
    inst = instances(sigma, max(w, default=0))
    return [(i, max(w[i:i + c])) for i in range(len(w) - c + 1) if w[i:i + c] in inst]


def _migrate(w: List[int], after: int, s: int, to_front: bool) -> None:
    """Within each maximal run of letters >= s past ``after``, move the s's to one end."""
    i, n = after, len(w)
    while i < n:
        if w[i] < s:
            i += 1
            continue
        j = i
        while j < n and w[j] >= s:
            j += 1
        run = w[i:j]
        ss = [v for v in run if v == s]
        rest = [v for v in run if v != s]
        w[i:j] = ss + rest if to_front else rest + ss
        i = j


def thm25_map(w: Sequence[int], sigma: Pattern, k: int, direction: str = FORWARD,
              check: bool = True, trace: Optional[list] = None) -> Word:
    """Send ``sigma-r(r+1)``-avoiders to ``sigma-(r+1)r``-avoiders (or back).

    An s-occurrence of sigma is one whose largest letter is s.  Forward:
    for s = k_1 < k_2 < ..., the least value above the previous with an
    s-occurrence, take the leftmost s-occurrence and, to its right, move
    the copies of s to the front of every maximal run of letters >= s.
    The inverse walks the values downward, largest first, moving the
    copies of s to the back.  The multiset of letters never changes.
    """
    _check_direction(direction)
    if not sigma.is_subword:
        raise DomainError(f"sigma = {sigma} must be a subword pattern")
    tau, rho = thm25_patterns(sigma)
    w = list(w)
    if check:
        _require_avoids(w, tau if direction == FORWARD else rho)
    c = len(sigma)
    forward = direction == FORWARD
    prev = 0 if forward else k + 1
    stages = 0
    while True:
        occ = _max_occurrences(w, sigma)
        if forward:
            vals = [b for _, b in occ if b > prev]
            if not vals:
                break
            s = min(vals)
        else:
            vals = [b for _, b in occ if b < prev]
            if not vals:
                break
            s = max(vals)
        j = min(i for i, b in occ if b == s)
        _migrate(w, j + c, s, to_front=forward)
        prev = s
        stages += 1
        if trace is not None:
            trace.append(tuple(w))
    assert stages <= k
    return tuple(w)


# -- interchange maps for 134-2, 124-3, 142-3 -----------------------------------

P134 = parse_pattern("134-2")
P143 = parse_pattern("143-2")
P124 = parse_pattern("124-3")
P214 = parse_pattern("214-3")
P142 = parse_pattern("142-3")
P241 = parse_pattern("241-3")


def _role_occurrences(w: Sequence[int], p: Pattern, position: int, value: int) -> List[Occurrence]:
    return [o for o in find_occurrences(w, p) if o.at(position) == value]


def _sweep(w: List[int], p: Pattern, position: int, value: int,
           swap: Tuple[int, int], leftmost: bool) -> None:
    """Repeatedly rewrite the leftmost (or rightmost) value-occurrence of p.

    ``swap`` names the two pattern positions whose word letters are
    exchanged; they always lie in the first block.
    """
    guard = len(w) ** 2 + 1
    while True:
        occs = _role_occurrences(w, p, position, value)
        if not occs:
            return
        o = occs[0] if leftmost else occs[-1]
        x, y = o.index_of(swap[0]), o.index_of(swap[1])
        w[x], w[y] = w[y], w[x]
        guard -= 1
        if guard < 0:
            raise RuntimeError("interchange sweep failed to terminate")


def thm33_map_134(w: Sequence[int], k: int, direction: str = FORWARD,
                  check: bool = True, trace: Optional[list] = None) -> Word:
    """``134-2``-avoiders to ``143-2``-avoiders.

    For i = k, k-1, ..., 4: while some occurrence of 143-2 has the letter
    i in its 4 position, swap that i with the letter after it, leftmost
    occurrence first.  The inverse runs i = 4, ..., k on occurrences of
    134-2, rightmost first, swapping the i with the letter before it.
    """
    _check_direction(direction)
    w = list(w)
    if direction == FORWARD:
        if check:
            _require_avoids(w, P134)
        for i in range(k, 3, -1):
            _sweep(w, P143, 2, i, (2, 3), leftmost=True)
            if trace is not None:
                trace.append(tuple(w))
    else:
        if check:
            _require_avoids(w, P143)
        for i in range(4, k + 1):
            _sweep(w, P134, 3, i, (2, 3), leftmost=False)
            if trace is not None:
                trace.append(tuple(w))
    return tuple(w)


def thm33_map_124(w: Sequence[int], k: int, direction: str = FORWARD,
                  check: bool = True, trace: Optional[list] = None) -> Word:
    """``124-3``-avoiders to ``214-3``-avoiders.

    For j = 1, ..., k-3: while some occurrence of 214-3 has j in its 1
    position, swap its 1 and 2 letters, rightmost occurrence first.  The
    inverse runs j = k-3, ..., 1 on 124-3, leftmost first.
    """
    _check_direction(direction)
    w = list(w)
    if direction == FORWARD:
        if check:
            _require_avoids(w, P124)
        for j in range(1, k - 2):
            _sweep(w, P214, 2, j, (1, 2), leftmost=False)
            if trace is not None:
                trace.append(tuple(w))
    else:
        if check:
            _require_avoids(w, P214)
        for j in range(k - 3, 0, -1):
            _sweep(w, P124, 1, j, (1, 2), leftmost=True)
            if trace is not None:
                trace.append(tuple(w))
    return tuple(w)


def thm33_map_142(w: Sequence[int], k: int, direction: str = FORWARD,
                  check: bool = True, trace: Optional[list] = None) -> Word:
    """``142-3``-avoiders to ``241-3``-avoiders.

    For i = k-2, ..., 2: while some occurrence of 241-3 has i in its 2
    position, swap its two smallest letters, leftmost occurrence first.
    The inverse runs i = 2, ..., k-2 on 142-3, rightmost first.
    """
    _check_direction(direction)
    w = list(w)
    if direction == FORWARD:
        if check:
            _require_avoids(w, P142)
        for i in range(k - 2, 1, -1):
            _sweep(w, P241, 1, i, (1, 3), leftmost=True)
            if trace is not None:
                trace.append(tuple(w))
    else:
        if check:
            _require_avoids(w, P241)
        for i in range(2, k - 1):
            _sweep(w, P142, 3, i, (1, 3), leftmost=False)
            if trace is not None:
                trace.append(tuple(w))
    return tuple(w)


THM33_MAPS = {
    "3.3a": (thm33_map_134, P134, P143),
    "3.3b": (thm33_map_124, P124, P214),
    "3.3c": (thm33_map_142, P142, P241),
}
