"""Riordan group tests."""

from fractions import Fraction

import pytest

from trigpoly.combinatorics import binomial
from trigpoly.riordan import (
    NotInvertible,
    NotProper,
    OrderMismatch,
    RiordanArray,
    binomial_series_identity,
    catalan_series,
    central_binomial_series,
    fundamental_theorem_check,
    generalized_binomial_series,
    group_axioms_check,
    inversion_theorem_check,
    lagrange_invert,
    matrix_vs_triangles_check,
    sign_flip_check,
    x_catalan_squared,
    zpread_riordan_check,
)
from trigpoly.series import TruncSeries, rational_series


def test_named_series():
    c = catalan_series(7)
    assert c.coeffs == (1, 1, 2, 5, 14, 42, 132, 429)
    # x C^2 - C + 1 = 0
    assert (c * c).shift(1) - c + TruncSeries.one(7) == TruncSeries.zero(7)
    b = central_binomial_series(5)
    assert b.coeffs == (1, 2, 6, 20, 70, 252)
    # B = C/(2 - C)
    assert central_binomial_series(7) == c * (2 - c).inverse()
    assert generalized_binomial_series(2, 6) == catalan_series(6)
    assert generalized_binomial_series(1, 6).coeffs == (1,) * 7


def test_lagrange_identity_map():
    x = TruncSeries.x(6)
    assert lagrange_invert(x) == x


def test_lagrange_inverse_of_x_over_1px2():
    f = rational_series((1,), (1, 2, 1), 8).shift(1)  # x/(1+x)^2
    fbar = lagrange_invert(f)
    assert fbar == x_catalan_squared(8)
    # coefficients (1/n) binomial(2n, n-1)
    for n in range(1, 9):
        assert fbar.coefficient(n) == Fraction(binomial(2 * n, n - 1), n)


def test_lagrange_by_iterative_substitution():
    # independent reversion oracle: iterate g -> x + g^2 for f = x - x^2
    f = TruncSeries((0, 1, -1), 6)
    fbar = lagrange_invert(f)
    assert fbar.coeffs == (0, 1, 1, 2, 5, 14, 42)
    assert f.compose(fbar).coeffs == (0, 1, 0, 0, 0, 0, 0)
    assert fbar.compose(f).coeffs == (0, 1, 0, 0, 0, 0, 0)


def test_lagrange_requires_invertibility():
    with pytest.raises(NotInvertible):
        lagrange_invert(TruncSeries((1, 1), 4))
    with pytest.raises(NotInvertible):
        lagrange_invert(TruncSeries((0, 0, 1), 4))


def test_group_law_examples():
    order = 40
    c = catalan_series(order)
    xc2 = x_catalan_squared(order)
    a = RiordanArray(c, xc2)
    expected_inv = RiordanArray(rational_series((1,), (1, 1), order),
                                rational_series((1,), (1, 2, 1), order).shift(1))
    assert a * expected_inv == RiordanArray.identity(order)
    assert RiordanArray.identity(order) * a == a
    assert a.inverse() == expected_inv


def test_identity_is_self_inverse():
    ident = RiordanArray.identity(12)
    assert ident.inverse() == ident


def test_inverse_requires_proper():
    order = 8
    g = TruncSeries((0, 1), order)
    f = TruncSeries((0, 1), order)
    with pytest.raises(NotProper):
        RiordanArray(g, f).inverse()


def test_order_mismatch():
    a = RiordanArray.identity(8)
    b = RiordanArray.identity(9)
    with pytest.raises(OrderMismatch):
        a * b
    with pytest.raises(OrderMismatch):
        a.apply(TruncSeries.one(9))


def test_matrix_view():
    order = 12
    c = catalan_series(order)
    xc2 = x_catalan_squared(order)
    m = RiordanArray(c, xc2).matrix(5)
    assert m == [
        [1, 0, 0, 0, 0],
        [1, 1, 0, 0, 0],
        [2, 3, 1, 0, 0],
        [5, 9, 5, 1, 0],
        [14, 28, 20, 7, 1],
    ]


def test_check_batteries():
    assert inversion_theorem_check(40).ok
    assert matrix_vs_triangles_check(30).ok
    assert fundamental_theorem_check(24).ok
    assert sign_flip_check(16).ok
    assert zpread_riordan_check(40).ok
    assert group_axioms_check(16).ok


def test_binomial_series_identity():
    assert binomial_series_identity(0, 0, 12).ok   # B itself
    assert binomial_series_identity(1, 0, 12).ok   # BC
    assert binomial_series_identity(0, 1, 10).ok   # B(C-1)
    assert binomial_series_identity(-1, 2, 20).ok
    # corollary forms: entries binomial(2n, n-m) and binomial(2n+1, n-m)
    b = central_binomial_series(10)
    c = catalan_series(10)
    col = b * (c - TruncSeries.one(10)).pow(2)
    for n in range(10):
        want = binomial(2 * n, n - 2) if n >= 2 else 0
        assert col.coefficient(n) == want
