"""Generating functions W_p(x;k) = sum_n a_p(n,k) x^n for fixed k.

Each formula is evaluated over exact truncated series.  Work is carried
out at a few orders above the requested one (some denominators start at
x^1 and cost an order when divided out) and the result is cut back.
Every returned series is checked to have nonnegative integer
coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Optional

from .enumeration import count_avoiders, transfer_counts
from .powerseries import (SeriesError, SeriesPoly, TruncSeries, chebyshev_T,
                          chebyshev_U, elem_sym, geometric)
from .words import Pattern, format_pattern, parse_pattern

DEFAULT_ORDER = 12
MARGIN = 4


class FormulaError(ArithmeticError):
    """A formula could not be evaluated as stated (or its routes disagree)."""


class FormulaDomainError(ValueError):
    """k lies outside the range where a formula is stated or evaluable."""


@dataclass
class GFResult:
    pattern: Pattern
    k: int
    series: TruncSeries
    theorem: str

    def coefficients(self) -> List[int]:
        return self.series.integers()

    def to_dict(self) -> dict:
        return {"pattern": format_pattern(self.pattern), "k": self.k,
                "theorem": self.theorem,
                "coeffs": [str(c) for c in self.coefficients()]}


def _finish(series: TruncSeries, order: int, p: Pattern, k: int, tag: str) -> GFResult:
    s = series.truncate(order)
    if not s.is_integral() or any(c < 0 for c in s.coeffs):
        raise FormulaError(f"theorem {tag}, k={k}: coefficients are not nonnegative integers: {s}")
    return GFResult(p, k, s, tag)


def _x(N: int, power: int = 1) -> TruncSeries:
    return TruncSeries.x(N, power)


def _one(N: int) -> TruncSeries:
    return TruncSeries.constant(1, N)


def _solve_upward(k: int, N: int, coeff: Callable[[int, int, int], TruncSeries],
                  base: Optional[Dict[int, TruncSeries]] = None) -> List[TruncSeries]:
    """Solve W(K) = 1 + sum_{j=0}^{K-1} coeff(K, j, N) W(K-j) for K = 0..k.

    The j = 0 term carries W(K) itself; it is moved to the left and
    divided out.  ``base`` pins W(K) for small K.
    """
    base = base or {}
    W: List[TruncSeries] = []
    for K in range(k + 1):
        if K in base:
            W.append(base[K])
            continue
        rhs = _one(N)
        for j in range(1, K):
            rhs = rhs + coeff(K, j, N) * W[K - j]
        W.append(rhs / (1 - coeff(K, 0, N)) if K > 0 else rhs)
    return W


# -- subword inputs and the product formula -----------------------------------

def subword_gf(tau: Pattern, k: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Series of tau-avoiders for a subword tau, by a suffix-state DP."""
    if not tau.is_subword:
        raise ValueError(f"{tau} is not a subword pattern")
    return TruncSeries(transfer_counts(tau, k, order))


def _tau_prime(tau: Pattern) -> Pattern:
    return Pattern.from_blocks([tau.letters, (tau.size + 1,)])


def product_formula(k: int, r1: int, order: int, inner: Callable[[int, int], TruncSeries]) -> TruncSeries:
    """1 / ((1-(r-1)x) prod_{j=r-1}^{k-1} (1 - x W_tau(x;j)))."""
    N = order
    denom = 1 - _x(N) * r1
    for j in range(r1, k):
        denom = denom * (1 - _x(N) * inner(j, N))
    return denom.reciprocal()


def thm41_product(tau: Pattern, k: int, order: int = DEFAULT_ORDER,
                  inner: Callable[[int, int], TruncSeries] = None) -> GFResult:
    """W for tau-r where tau is a subword with largest letter r-1.

    ``inner(j, N)`` supplies W_tau(x;j); by default the DP route.
    """
    if not tau.is_subword:
        raise FormulaDomainError(f"{tau} is not a subword pattern")
    r1 = tau.size
    if k < r1:
        raise FormulaDomainError(f"k={k} must be at least {r1}")
    inner = inner or (lambda j, N: subword_gf(tau, j, N))
    N = order + MARGIN
    return _finish(product_formula(k, r1, N, inner), order, _tau_prime(tau), k, "4.1")


# -- the five closed forms built on the product formula ---------------------

def _w111(j: int, N: int) -> TruncSeries:
    x = _x(N)
    return (1 + x + x * x) / (1 - x * (1 + x) * (j - 1))


def _w112(j: int, N: int) -> TruncSeries:
    # x / (1 - 1/x + (1/x)(1-x^2)^j), cleared of the 1/x
    x = _x(N)
    return x.divide_exact(x - 1 + (1 - x * x) ** j)


def _w212(j: int, N: int) -> TruncSeries:
    x = _x(N)
    # 1 / (1 - x - x sum_{i=1}^{j-1} 1/(1 + i x^2))
    s = TruncSeries.constant(0, N)
    for i in range(1, j):
        s = s + (1 + x * x * i).reciprocal()
    return (1 - x - x * s).reciprocal()


def _w123(j: int, N: int) -> TruncSeries:
    x = _x(N)
    s = TruncSeries.constant(0, N)
    for i in range(3, j + 1):
        sign = Fraction((-1) ** ((i - 3) // 3) + (-1) ** ((i - 2) // 3), 2)
        s = s + (-x) ** i * (sign * comb(j, i))
    return (1 - x * j - s).reciprocal()


def _w213(j: int, N: int) -> TruncSeries:
    x = _x(N)
    s = TruncSeries.constant(0, N)
    for i in range(0, j - 1):
        prod = _one(N)
        for ell in range(0, i + 1):
            prod = prod * (1 - x * x * ell)
        s = s + prod
    return (1 - x - x * s).reciprocal()


# subword W_tau(x; j) with the index of the displayed product
EXAMPLE41 = {
    "111-2": ("111", 1, _w111),
    "112-3": ("112", 2, _w112),
    "212-3": ("212", 2, _w212),
    "123-4": ("123", 3, _w123),
    "213-4": ("213", 3, _w213),
}


def example41_closed_form(which: str, k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if which not in EXAMPLE41:
        raise FormulaDomainError(f"no closed form for {which}; choose from {sorted(EXAMPLE41)}")
    sub, r1, inner = EXAMPLE41[which]
    if k < r1:
        raise FormulaDomainError(f"{which} closed form needs k >= {r1}")
    N = order + MARGIN
    return _finish(product_formula(k, r1, N, inner), order, parse_pattern(which), k, "ex4.1")


# -- 111-1 --------------------------------------------------------------------

P1111 = parse_pattern("111-1")


def thm42_closed(k: int, N: int) -> TruncSeries:
    x = _x(N)
    q = x * (1 + x)
    total = TruncSeries.constant(0, N)
    for j in range(1, k + 1):
        num = (1 + q + (x ** 3 if j == 1 else 0)) * (factorial(k - j) * comb(k, j)) * x ** (3 * (k - j))
        den = _one(N)
        for i in range(j, k + 1):
            den = den * (1 - q * (i - 1))
        total = total + num / den
    return total


def thm42_recurrence(k: int, N: int) -> TruncSeries:
    x = _x(N)
    q = x * (1 + x)
    W = _one(N)
    for K in range(1, k + 1):
        d = 1 - q * (K - 1)
        W = (1 + q) / d + x ** 3 * K / d * W
    return W


def thm42_W_1111(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if k < 1:
        raise FormulaDomainError("stated for k >= 1")
    N = order + MARGIN
    a, b = thm42_closed(k, N), thm42_recurrence(k, N)
    if a != b:
        raise FormulaError(f"111-1, k={k}: closed form and recurrence disagree")
    return _finish(a, order, P1111, k, "4.2")


# -- 112-1 --------------------------------------------------------------------

P1121 = parse_pattern("112-1")


def thm43_array(i: int, j: int, N: int) -> TruncSeries:
    x = _x(N)
    return (1 - x * x) ** (i - j) * comb(i, j) * x ** (2 * j + 1)


def thm43_array_recurrence(imax: int, N: int) -> List[SeriesPoly]:
    """A_i(y) = (1 - x^2 + x^2 y) A_{i-1}(y), A_0 = x."""
    x = _x(N)
    step = SeriesPoly([1 - x * x, x * x], N)
    A = [SeriesPoly.from_series(x)]
    for _ in range(imax):
        A.append(A[-1] * step)
    return A


def thm43_W_1121(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if k < 0:
        raise FormulaDomainError("k must be nonnegative")
    N = order + MARGIN

    def coeff(K, j, N):
        s = TruncSeries.constant(0, N)
        for i in range(j, K):
            s = s + thm43_array(i, j, N)
        return s

    return _finish(_solve_upward(k, N, coeff)[k], order, P1121, k, "4.3")


# -- 112-2 --------------------------------------------------------------------

P1122 = parse_pattern("112-2")


def thm44_closed(k: int, N: int) -> TruncSeries:
    x = _x(N)

    def den(i):
        return (1 - x * x) ** i - 1 + x

    total = TruncSeries.constant(0, N)
    for j in range(1, k + 1):
        term = x.divide_exact(den(j))
        for i in range(j + 1, k + 1):
            term = term * (x * x * i - 1 + (1 - x * x) ** i).divide_exact(den(i))
        total = total + term
    return total


def thm44_first_letter(k: int, i: int, W_k: TruncSeries, W_prev: TruncSeries, N: int) -> TruncSeries:
    """W(x;k|i) expressed through W(x;k) and W(x;k-1), valid for k >= 2."""
    x = _x(N)
    p = (1 - x * x) ** i
    return ((x * x).divide_exact(p) + (x * (1 - x)).divide_exact(p) * W_k
            + x * ((x * x * k - 1).divide_exact(p) + 1) * W_prev)


def thm44_recurrence(k: int, N: int) -> TruncSeries:
    """Sum the first-letter series over i and solve for W(x;k)."""
    x = _x(N)
    W = [_one(N), geometric(1, N)]
    for K in range(2, k + 1):
        lin = TruncSeries.constant(0, N)
        rest = _one(N)
        for i in range(1, K + 1):
            p = (1 - x * x) ** i
            lin = lin + (x * (1 - x)) / p
            rest = rest + (x * x) / p + x * ((x * x * K - 1) / p + 1) * W[K - 1]
        W.append(rest / (1 - lin))
    return W[k]


def thm44_W_1122(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if k < 1:
        raise FormulaDomainError("stated for k >= 1")
    N = order + MARGIN
    a = thm44_closed(k, N)
    b = thm44_recurrence(k, N)
    if a.truncate(order) != b.truncate(order):
        raise FormulaError(f"112-2, k={k}: closed form and first-letter recurrence disagree")
    return _finish(a, order, P1122, k, "4.4")


# -- 113-2 (and 133-2) --------------------------------------------------------

P1132 = parse_pattern("113-2")


def thm45_recurrence(imax: int, N: int) -> List[SeriesPoly]:
    """A_{i+1} = (1+y) A_i - (x^2(1-y) + y) A_{i-1}, A_0 = A_1 = x."""
    x = _x(N)
    y = SeriesPoly.y(N)
    u = 1 + y
    D = (1 - y) * (x * x) + y
    A = [SeriesPoly.from_series(x), SeriesPoly.from_series(x)]
    while len(A) <= imax:
        A.append(u * A[-1] - D * A[-2])
    return A[: imax + 1]


def _homogenized(cheb: List[int], u: SeriesPoly, D: SeriesPoly, i: int) -> SeriesPoly:
    """D^{i/2} P(u / (2 sqrt D)) for a degree-i Chebyshev polynomial P."""
    total = SeriesPoly([], u.order)
    for m, c in enumerate(cheb):
        if c == 0:
            continue
        if (i - m) % 2:
            raise FormulaError("Chebyshev polynomial has a term of the wrong parity")
        term = SeriesPoly.from_series(_one(u.order)) * Fraction(c, 2 ** m)
        for _ in range(m):
            term = term * u
        for _ in range((i - m) // 2):
            term = term * D
        total = total + term
    return total


def thm45_chebyshev(imax: int, N: int) -> List[SeriesPoly]:
    """The closed form x D^{i/2} (2y T_i + (1-y) U_i)(u/2sqrt D) / (1+y)."""
    x = _x(N)
    y = SeriesPoly.y(N)
    u = 1 + y
    D = (1 - y) * (x * x) + y
    out = []
    for i in range(imax + 1):
        T = _homogenized(chebyshev_T(i), u, D, i)
        U = _homogenized(chebyshev_U(i), u, D, i)
        try:
            out.append(((2 * y * T + (1 - y) * U) * x).div_one_plus_y())
        except SeriesError as exc:
            raise FormulaError(f"113-2: Chebyshev form at i={i} is not divisible by 1+y") from exc
    return out


def _array_sum(A: List[SeriesPoly], N: int):
    def coeff(K, j, N_):
        s = TruncSeries.constant(0, N)
        for i in range(j, K):
            s = s + A[i].coefficient(j)
        return s
    return coeff


def thm45_W_1132(k: int, order: int = DEFAULT_ORDER, route: str = "recurrence") -> GFResult:
    if k < 0:
        raise FormulaDomainError("k must be nonnegative")
    N = order + MARGIN
    imax = max(k - 1, 1)
    if route == "recurrence":
        A = thm45_recurrence(imax, N)
    elif route == "chebyshev":
        A = thm45_chebyshev(imax, N)
    else:
        raise ValueError("route must be 'recurrence' or 'chebyshev'")
    return _finish(_solve_upward(k, N, _array_sum(A, N))[k], order, P1132, k, "4.5")


# -- 121-1 --------------------------------------------------------------------

P1211 = parse_pattern("121-1")


def thm46_W_1211(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if k < 1:
        raise FormulaDomainError("stated for k >= 1")
    N = order + MARGIN
    x = _x(N)

    def S(m, power):
        s = TruncSeries.constant(0, N)
        for ell in range(m):
            s = s + (x ** power * (ell if power == 3 else 1)) / (1 + x * x * ell)
        return s

    total = TruncSeries.constant(0, N)
    for j in range(1, k + 1):
        term = (1 - S(j, 1)).reciprocal()
        for i in range(j + 1, k + 1):
            term = term * S(i, 3) / (1 - S(i, 1))
        total = total + term
    return _finish(total, order, P1211, k, "4.6")


# -- 121-2 --------------------------------------------------------------------

P1212 = parse_pattern("121-2")


def thm47_coeff(K: int, j: int, N: int) -> TruncSeries:
    x = _x(N)
    s = TruncSeries.constant(0, N)
    for i in range(j, K):
        den = _one(N)
        for ell in range(i - j, i + 1):
            den = den * (1 + x * x * ell)
        s = s + den.reciprocal() * comb(i, j)
    return s * factorial(j) * x ** (2 * j + 1)


def thm47_W_1212(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if k < 0:
        raise FormulaDomainError("k must be nonnegative")
    N = order + MARGIN
    return _finish(_solve_upward(k, N, thm47_coeff)[k], order, P1212, k, "4.7")


# -- 132-3 --------------------------------------------------------------------

P1323 = parse_pattern("132-3")


def thm48_closed_array(i: int, j: int, N: int) -> TruncSeries:
    """x sum_d (-1)^d C(i,d) e_{i-j}((d-1)x^2-1, ..., -1).

    The alternating sign comes from expanding (1+zx^2)^{-(y-1)/x^2}.
    """
    x = _x(N)
    total = TruncSeries.constant(0, N)
    for d in range(i + 1):
        vals = [x * x * c - 1 for c in range(d - 1, -1, -1)]
        total = total + elem_sym(i - j, vals) * ((-1) ** d * comb(i, d))
    return x * total


def thm48_recurrence(imax: int, N: int) -> List[SeriesPoly]:
    """A_{i+1} = (1 - i x^2) A_i + i x^2 y A_{i-1}, A_0 = A_1 = x."""
    x = _x(N)
    y = SeriesPoly.y(N)
    A = [SeriesPoly.from_series(x), SeriesPoly.from_series(x)]
    while len(A) <= imax:
        i = len(A) - 1
        A.append(A[-1] * (1 - x * x * i) + y * A[-2] * (x * x * i))
    return A[: imax + 1]


def thm48_W_1323(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if k < 0:
        raise FormulaDomainError("k must be nonnegative")
    N = order + MARGIN
    A = thm48_recurrence(max(k - 1, 1), N)
    for i in range(k):
        for j in range(i + 1):
            if thm48_closed_array(i, j, N) != A[i].coefficient(j):
                raise FormulaError(f"132-3: routes disagree at a_({i},{j})")
    return _finish(_solve_upward(k, N, _array_sum(A, N))[k], order, P1323, k, "4.8")


# -- 132-1 (and 132-2) --------------------------------------------------------

P1321 = parse_pattern("132-1")


def thm49_array(i: int, j: int, N: int) -> TruncSeries:
    x = _x(N)
    vals = [(1 - x * x * s).reciprocal() * s for s in range(i)]
    prod = _one(N)
    for s in range(i):
        prod = prod * (1 - x * x * s)
    return elem_sym(j, vals) * x ** (2 * j + 1) * prod


def thm49_W_1321(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if k < 0:
        raise FormulaDomainError("k must be nonnegative")
    N = order + MARGIN

    def coeff(K, j, N):
        s = TruncSeries.constant(0, N)
        for i in range(j, K):
            s = s + thm49_array(i, j, N)
        return s

    return _finish(_solve_upward(k, N, coeff)[k], order, P1321, k, "4.9")


# -- 231-3 --------------------------------------------------------------------

P2313 = parse_pattern("231-3")


def thm410_array(k: int, i: int, m: int, N: int) -> TruncSeries:
    x = _x(N)

    def frac(v):
        return (1 - x * x * v).reciprocal() * v

    def prod(lo, hi):
        p = _one(N)
        for s in range(lo, hi + 1):
            p = p * (1 - x * x * (k - s))
        return p

    lead = x ** (2 * m + 1)
    first = lead * elem_sym(m, [frac(k - s) for s in range(1, i + 1)]) * prod(1, i) * Fraction(k - i - 1, k - 1)
    second = TruncSeries.constant(0, N)
    for j in range(1, i + 1):
        den = (k - j - 1) * (k - j)
        num = elem_sym(m, [frac(k - s) for s in range(j + 1, i + 1)]) * prod(j + 1, i) * (k - i - 1)
        if den == 0:
            if num.is_zero():
                continue
            raise FormulaError(f"231-3: vanishing denominator at k={k}, i={i}, j={j}")
        second = second + num * Fraction(1, den)
    return first + lead * second


def thm410_first_letter(k: int, N: int) -> Dict[int, Dict[int, TruncSeries]]:
    """Arrays a[l][j] with W(x;k|l) = sum_j a[l][j] W(x;k-j).

    Split an avoider on its first two letters: a rise l < l' followed by
    a letter below l bans l' from the rest of the word.  This gives
    W(k|l) = x W(k) - x^2 (k-l) sum_{a<l} (W(k|a) - W(k-1|a)),
    and W(k-1|a) is expanded one level down.
    """
    x = _x(N)
    zero = TruncSeries.constant(0, N)
    rows: Dict[int, Dict[int, TruncSeries]] = {}
    below = thm410_first_letter(k - 1, N) if k >= 2 else {}
    acc: Dict[int, TruncSeries] = {}
    for l in range(1, k + 1):
        row = {0: x}
        for j, v in acc.items():
            row[j] = row.get(j, zero) - v * (x * x * (k - l))
        rows[l] = row
        if l < k:
            for j, v in row.items():
                acc[j] = acc.get(j, zero) + v
            for j, v in below[l].items():
                acc[j + 1] = acc.get(j + 1, zero) - v
    return rows


def thm410_W_2313(k: int, order: int = DEFAULT_ORDER, route: str = "closed") -> GFResult:
    """W for 231-3.

    route="closed" evaluates the stated double sum term by term;
    route="first-letter" uses the first-letter decomposition instead.
    """
    if route == "first-letter":
        if k < 0:
            raise FormulaDomainError("k must be nonnegative")
        N = order + MARGIN
        zero = TruncSeries.constant(0, N)

        def coeff(K, j, N):
            rows = thm410_first_letter(K, N)
            return sum((r.get(j, zero) for r in rows.values()), zero)

        return _finish(_solve_upward(k, N, coeff)[k], order, P2313, k, "4.10")
    if route != "closed":
        raise ValueError(f"unknown route {route!r}")
    if k < 3:
        raise FormulaDomainError("231-3 formula divides by k-1 and (k-j-1)(k-j); evaluated for k >= 3")
    N = order + MARGIN
    base = {K: geometric(K, N) for K in range(3)}

    def coeff(K, j, N):
        s = TruncSeries.constant(0, N)
        for i in range(j, K + 1):
            s = s + thm410_array(K, i, j, N)
        return s

    return _finish(_solve_upward(k, N, coeff, base)[k], order, P2313, k, "4.10")


# -- registry and verification ------------------------------------------------

THEOREMS = {
    "4.2": (P1111, thm42_W_1111),
    "4.3": (P1121, thm43_W_1121),
    "4.4": (P1122, thm44_W_1122),
    "4.5": (P1132, thm45_W_1132),
    "4.6": (P1211, thm46_W_1211),
    "4.7": (P1212, thm47_W_1212),
    "4.8": (P1323, thm48_W_1323),
    "4.9": (P1321, thm49_W_1321),
    "4.10": (P2313, thm410_W_2313),
}


@dataclass
class GFReport:
    result: GFResult
    n_max: int
    mismatch: Optional[tuple] = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def summary(self) -> str:
        r = self.result
        head = f"W_{format_pattern(r.pattern)}(x;{r.k}) [{r.theorem}] n<={self.n_max}"
        if self.passed:
            return f"{head}: matches enumeration"
        n, got, want = self.mismatch
        return f"{head}: coefficient {n} is {got}, enumeration gives {want}"


def verify_gf(result: GFResult, n_max: int, pattern: Pattern = None,
              cap: Optional[int] = None) -> GFReport:
    """Compare coefficients 0..n_max with brute-force avoider counts."""
    if n_max > result.series.order:
        raise ValueError("n_max beyond truncation order")
    p = pattern or result.pattern
    for n in range(n_max + 1):
        want = count_avoiders(n, result.k, p, cap)
        got = result.series.coefficient(n)
        if got != want:
            return GFReport(result, n_max, (n, got, want))
    return GFReport(result, n_max)
