"""Integer sequence and triangle tests."""

from fractions import Fraction

import pytest

from trigpoly.combinatorics import (
    OutOfTriangle,
    a014963,
    binomial,
    catalan,
    catalan_segner,
    catalan_triangle_even,
    catalan_triangle_odd,
    central_binomial,
    divisors,
    even_triangle,
    fuss_catalan,
    fuss_catalan_forms,
    is_prime,
    moebius,
    odd_triangle,
    pyramidal,
    pyramidal_row,
    totient,
)


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(-1, 0) == 1
    assert binomial(8, 3) == 56
    assert binomial(3, 7) == 0
    assert binomial(-1, 1) == -1
    assert binomial(-2, 3) == -4
    with pytest.raises(ValueError):
        binomial(4, -1)


def test_binomial_pascal_recurrence():
    for n in range(-6, 12):
        for k in range(1, 10):
            assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


def test_pyramidal_values():
    assert pyramidal(3, 2) == 14
    assert pyramidal(4, 3) == 50
    assert all(pyramidal(i, 0) == 1 for i in range(10))
    assert pyramidal(2, -1) == 0
    assert pyramidal_row(0, 5) == [1, 2, 2, 2, 2]
    assert pyramidal_row(1, 5) == [1, 3, 5, 7, 9]


def test_pyramidal_difference_property():
    for i in range(51):
        for j in range(51):
            assert pyramidal(i + 1, j) - pyramidal(i + 1, j - 1) == pyramidal(i, j)


def test_pyramidal_matches_generating_function():
    from trigpoly.series import rational_series

    for i in range(6):
        den = [1]
        for _ in range(i + 1):
            den = [a - b for a, b in zip(den + [0], [0] + den)]  # *(1 - t)
        series = rational_series((1, 1), den, 12)
        for j in range(13):
            assert series.coefficient(j) == pyramidal(i, j)


def test_catalan_values():
    assert catalan(0) == 1
    assert catalan(7) == 429
    assert central_binomial(4) == 70
    assert catalan_segner(9) == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_catalan_formula_matches_segner():
    segner = catalan_segner(201)
    for n in range(201):
        assert catalan(n) == segner[n]


def test_fuss_catalan_values():
    assert fuss_catalan(3, 2, 1) == 5
    assert all(fuss_catalan(m, 1, 1) == 1 for m in range(12))
    assert fuss_catalan(2, 2, 3) == 9
    with pytest.raises(ValueError):
        fuss_catalan(2, 0, 0)


def test_fuss_catalan_forms_agree():
    for m in range(1, 12):
        for p in range(6):
            for r in range(6):
                if m * p + r == 0:
                    continue
                forms = fuss_catalan_forms(m, p, r)
                assert len(set(forms)) == 1


def test_fuss_catalan_convolution():
    for p in range(6):
        for r in range(6):
            for s in range(6):
                if p == 0 and 0 in (r, s):
                    continue
                for m in range(31):
                    want = fuss_catalan(m, p, r + s)
                    got = sum(fuss_catalan(k, p, r) * fuss_catalan(m - k, p, s)
                              for k in range(m + 1))
                    assert got == want


def test_triangle_values():
    assert catalan_triangle_even(5, 2) == 48
    assert catalan_triangle_odd(3, 1) == 9
    assert catalan_triangle_even(1, 1) == 1
    with pytest.raises(OutOfTriangle):
        catalan_triangle_even(2, 3)
    with pytest.raises(OutOfTriangle):
        catalan_triangle_odd(2, 3)


def test_triangle_displays():
    assert even_triangle(6) == [
        [1, 0, 0, 0, 0, 0],
        [2, 1, 0, 0, 0, 0],
        [5, 4, 1, 0, 0, 0],
        [14, 14, 6, 1, 0, 0],
        [42, 48, 27, 8, 1, 0],
        [132, 165, 110, 44, 10, 1],
    ]
    assert odd_triangle(6) == [
        [1, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [2, 3, 1, 0, 0, 0],
        [5, 9, 5, 1, 0, 0],
        [14, 28, 20, 7, 1, 0],
        [42, 90, 75, 35, 9, 1],
    ]


def test_triangle_columns_are_convolution_powers():
    from trigpoly.riordan import catalan_series

    order = 30
    c = catalan_series(order)
    for j in range(1, 7):
        power = c.pow(2 * j)
        for i in range(j, order // 2):
            assert catalan_triangle_even(i, j) == power.coefficient(i - j)
    for j in range(6):
        power = c.pow(2 * j + 1)
        for i in range(j, order // 2):
            assert catalan_triangle_odd(i, j) == power.coefficient(i - j)


def test_arithmetic_functions():
    assert totient(12) == 4
    assert moebius(6) == 1
    assert moebius(12) == 0
    assert moebius(30) == -1
    assert a014963(9) == 3
    assert a014963(12) == 1
    assert a014963(16) == 2
    assert [a014963(d) for d in range(1, 11)] == [1, 2, 3, 2, 5, 1, 7, 2, 3, 1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert is_prime(2) and is_prime(97) and not is_prime(91)


def test_totient_divisor_sum():
    for n in range(1, 200):
        assert sum(totient(d) for d in divisors(n)) == n
