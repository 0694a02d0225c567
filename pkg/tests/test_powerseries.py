from fractions import Fraction
from itertools import combinations
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from vincular.powerseries import (SeriesError, SeriesPoly, TruncSeries, chebyshev_T, chebyshev_U,
                                  elem_sym, elem_sym_all, geometric, poly_eval)

N = 8
coeffs = st.lists(st.fractions(max_denominator=5, min_value=-5, max_value=5), min_size=1, max_size=N + 1)


def series(cs):
    return TruncSeries(cs, N)


def test_basics():
    x = TruncSeries.x(N)
    assert (1 / (1 - x)).integers() == [1] * (N + 1)
    assert geometric(2, 4).integers() == [1, 2, 4, 8, 16]
    assert str(geometric(2, 2)) == "1 + 2*x + 4*x^2 + O(x^3)"
    assert (x ** 3).valuation() == 3
    assert TruncSeries.constant(0, N).is_zero()
    assert ((1 + x) ** 3).integers()[:5] == [1, 3, 3, 1, 0]


def test_truncation_order_is_the_minimum():
    a = TruncSeries([1, 1, 1], 2)
    b = TruncSeries([1] * 6, 5)
    assert (a + b).order == 2
    assert (a * b).order == 2


@given(coeffs, coeffs, coeffs)
def test_ring_laws(a, b, c):
    a, b, c = series(a), series(b), series(c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == TruncSeries.constant(0, N)


@given(coeffs)
def test_reciprocal(a):
    s = series(a)
    if s.coefficient(0) == 0:
        with pytest.raises(SeriesError):
            s.reciprocal()
    else:
        assert s * s.reciprocal() == TruncSeries.constant(1, N)


def test_divide_exact_cancels_common_powers():
    x = TruncSeries.x(N)
    q = (x * (1 + x)).divide_exact(x * (1 - x))
    assert q.integers()[:4] == [1, 2, 2, 2]
    assert q.order == N - 1


def test_shift_unshift():
    x = TruncSeries.x(N)
    s = 1 + x
    assert s.shift(2).unshift(2).truncate(N - 2) == s.truncate(N - 2)


def test_chebyshev():
    assert chebyshev_T(3) == [0, -3, 0, 4]
    assert chebyshev_U(3) == [0, -4, 0, 8]
    for i in range(2, 9):
        t_prev, t_prev2 = chebyshev_T(i - 1), chebyshev_T(i - 2)
        expected = [0] + [2 * c for c in t_prev]
        for j, c in enumerate(t_prev2):
            expected[j] -= c
        assert chebyshev_T(i) == expected
    # T_i(cos t) = cos(i t) at t = 0 and U_i(1) = i + 1
    assert all(poly_eval(chebyshev_T(i), 1) == 1 for i in range(8))
    assert all(poly_eval(chebyshev_U(i), 1) == i + 1 for i in range(8))


@given(st.lists(st.integers(-4, 4), max_size=6), st.integers(0, 7))
def test_elem_sym_matches_definition(vals, m):
    expected = sum(prod(c) for c in combinations(vals, m)) if m <= len(vals) else 0
    assert elem_sym(m, vals) == expected


def test_elem_sym_generating_identity():
    vals = [1, 2, 3]
    assert elem_sym_all(vals) == [1, 6, 11, 6]
    assert elem_sym(0, []) == 1
    assert elem_sym(4, vals) == 0
    ones = [1] * 5
    assert [elem_sym(m, ones) for m in range(6)] == [comb(5, m) for m in range(6)]


def test_series_poly():
    x = TruncSeries.x(N)
    y = SeriesPoly.y(N)
    p = (y + 1) * (y * x + 2)
    assert p.degree == 2
    assert p.div_one_plus_y() == y * x + 2
    assert (p - p).degree <= 0
    assert SeriesPoly.from_series(x).coefficient(0) == x
    assert p.coefficient(5) == TruncSeries.constant(0, N)


def test_series_poly_division_requires_divisibility():
    y = SeriesPoly.y(N)
    with pytest.raises(SeriesError):
        (y + 2).div_one_plus_y()


def test_exact_fractions():
    x = TruncSeries.x(N)
    s = 1 / (2 - x)
    assert s.coefficient(1) == Fraction(1, 4)
    assert not s.is_integral()
