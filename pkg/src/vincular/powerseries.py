"""Truncated power series over the rationals, and friends.

``TruncSeries`` keeps the coefficients of x^0..x^N exactly; every result
carries the smaller truncation order of its operands.  ``SeriesPoly`` is
a polynomial in an auxiliary variable y whose coefficients are series.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Union

Scalar = Union[int, Fraction]


class SeriesError(ArithmeticError):
    pass


class TruncSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int = None):
        c = [Fraction(v) for v in coeffs]
        if order is not None:
            c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        if not c:
            raise SeriesError("a series needs at least the constant coefficient")
        self.coeffs = c

    # constructors

    @classmethod
    def constant(cls, v: Scalar, order: int) -> "TruncSeries":
        return cls([v], order)

    @classmethod
    def x(cls, order: int, power: int = 1) -> "TruncSeries":
        c = [0] * (order + 1)
        if power <= order:
            c[power] = 1
        return cls(c)

    @classmethod
    def poly(cls, coeffs: Sequence[Scalar], order: int) -> "TruncSeries":
        """The polynomial sum coeffs[i] x^i, truncated."""
        return cls(list(coeffs)[: order + 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if n > self.order:
            raise SeriesError(f"coefficient {n} is beyond truncation order {self.order}")
        return self.coeffs[n] if n >= 0 else Fraction(0)

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise SeriesError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1])

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order + 1 if none)."""
        for i, v in enumerate(self.coeffs):
            if v:
                return i
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # arithmetic

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Rational)):
            return TruncSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return TruncSeries([a * other for a in self.coeffs])
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncSeries(out)

    __rmul__ = __mul__

    def scalar_mul(self, c: Scalar) -> "TruncSeries":
        return self * c

    def reciprocal(self) -> "TruncSeries":
        a = self.coeffs
        if a[0] == 0:
            raise SeriesError("reciprocal of a series with zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, len(a)):
            s = sum(a[i] * out[n - i] for i in range(1, n + 1))
            out.append(-s * inv0)
        return TruncSeries(out)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return TruncSeries([v / Fraction(other) for v in self.coeffs])
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        result = TruncSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, m: int) -> "TruncSeries":
        """x^m times the series (same truncation order)."""
        if m < 0:
            raise SeriesError("negative shift; use divide_exact")
        return TruncSeries(([Fraction(0)] * m + self.coeffs)[: self.order + 1])

    def unshift(self, m: int) -> "TruncSeries":
        """Divide by x^m; the low m coefficients must vanish and m orders are lost."""
        if any(self.coeffs[:m]):
            raise SeriesError(f"series is not divisible by x^{m}")
        if m > self.order:
            raise SeriesError("nothing left after division by x^m")
        return TruncSeries(self.coeffs[m:])

    def divide_exact(self, other: "TruncSeries") -> "TruncSeries":
        """Quotient when the divisor may start at a positive power of x.

        The common power of x is cancelled before taking a reciprocal, so
        the result has order min(orders) - valuation(other).
        """
        v = other.valuation()
        if v > other.order:
            raise SeriesError("division by a series that vanishes to its truncation order")
        n = min(self.order, other.order)
        return self.truncate(n).unshift(v) * other.truncate(n).unshift(v).reciprocal()

    # comparison and display

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return " + ".join(terms) + " + O(x^{})".format(self.order + 1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integers(self) -> List[int]:
        if not self.is_integral():
            raise SeriesError("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]


def geometric(a: Scalar, order: int) -> TruncSeries:
    """1 / (1 - a x)."""
    return TruncSeries([Fraction(a) ** i for i in range(order + 1)])


class SeriesPoly:
    """A polynomial sum_j A[j] y^j with truncated-series coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[TruncSeries], order: int = None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise SeriesError("order needed for the zero polynomial")
            order = min(c.order for c in coeffs)
        self.order = order
        coeffs = [c.truncate(order) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = coeffs

    @classmethod
    def from_series(cls, s: TruncSeries) -> "SeriesPoly":
        return cls([s], s.order)

    @classmethod
    def y(cls, order: int) -> "SeriesPoly":
        return cls([TruncSeries.constant(0, order), TruncSeries.constant(1, order)], order)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> TruncSeries:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return TruncSeries.constant(0, self.order)

    def _coerce(self, other) -> "SeriesPoly":
        if isinstance(other, SeriesPoly):
            return other
        if isinstance(other, TruncSeries):
            return SeriesPoly([other], min(other.order, self.order))
        if isinstance(other, (int, Rational)):
            return SeriesPoly([TruncSeries.constant(other, self.order)], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        d = max(len(self.coeffs), len(other.coeffs))
        zero = TruncSeries.constant(0, order)
        a = self.coeffs + [zero] * (d - len(self.coeffs))
        b = other.coeffs + [zero] * (d - len(other.coeffs))
        return SeriesPoly([u + v for u, v in zip(a, b)], order)

    __radd__ = __add__

    def __neg__(self):
        return SeriesPoly([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        if not self.coeffs or not other.coeffs:
            return SeriesPoly([], order)
        out = [TruncSeries.constant(0, order) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return SeriesPoly(out, order)

    __rmul__ = __mul__

    def div_one_plus_y(self) -> "SeriesPoly":
        """Exact quotient by (1 + y); a nonzero remainder is an error."""
        if not self.coeffs:
            return self
        rem = list(self.coeffs)
        q = [None] * (len(rem) - 1)
        for j in range(len(rem) - 1, 0, -1):
            q[j - 1] = rem[j]
            rem[j - 1] = rem[j - 1] - rem[j]
        if not rem[0].is_zero():
            raise SeriesError("polynomial is not divisible by 1 + y")
        return SeriesPoly(q, self.order) if q else SeriesPoly([], self.order)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"SeriesPoly({self.coeffs!r})"


# -- polynomials with integer coefficients ------------------------------------

def _poly_sub(a: List[int], b: List[int]) -> List[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [u - v for u, v in zip(a, b)]


def _chebyshev(i: int, first: List[int]) -> List[int]:
    if i < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    prev, cur = [1], first
    if i == 0:
        return prev
    for _ in range(i - 1):
        prev, cur = cur, _poly_sub([0] + [2 * c for c in cur], prev)
    return cur


def chebyshev_T(i: int) -> List[int]:
    """Coefficients (constant first) of T_i: T_0 = 1, T_1 = t, T_i = 2t T_{i-1} - T_{i-2}."""
    return _chebyshev(i, [0, 1])


def chebyshev_U(i: int) -> List[int]:
    """Coefficients of U_i: same recurrence with U_0 = 1, U_1 = 2t."""
    return _chebyshev(i, [0, 2])


def poly_eval(coeffs: Sequence[int], t):
    """Horner evaluation; ``t`` may be any ring element."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def elem_sym(m: int, values: Sequence, one=1, zero=0):
    """Elementary symmetric function e_m(values).

    e_0 is ``one`` and e_m is ``zero`` when m exceeds the number of values.
    Computed from the expansion of prod (1 + v z).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > len(values):
        return zero
    e = [one] + [zero] * m
    for count, v in enumerate(values, start=1):
        for j in range(min(m, count), 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e[m]


def elem_sym_all(values: Sequence, one=1, zero=0) -> list:
    """``[e_0, e_1, ..., e_len]`` of the given values."""
    e = [one] + [zero] * len(values)
    for count, v in enumerate(values, start=1):
        for j in range(count, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e
