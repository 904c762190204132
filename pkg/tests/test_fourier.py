"""Trigonometric moment and super Catalan matrix tests."""

from fractions import Fraction

import pytest

from trigpoly.fourier import (
    _bareiss_det,
    hypergeometric_sum_check,
    hypergeometric_sum_range,
    integral_recurrence_check,
    integrality_check,
    lower_binomial_matrix,
    lu_factorization_check,
    moment_matrix_oracle_check,
    partition_of_unity_check,
    super_catalan,
    super_catalan_matrix,
    symmetry_check,
    trig_integral,
)

M_DISPLAY = [
    [1, 2, 6, 20, 70, 252, 924],
    [2, 2, 4, 10, 28, 84, 264],
    [6, 4, 6, 12, 28, 72, 198],
    [20, 10, 12, 20, 40, 90, 220],
    [70, 28, 28, 40, 70, 140, 308],
    [252, 84, 72, 90, 140, 252, 504],
    [924, 264, 198, 220, 308, 504, 924],
]


def test_super_catalan_values():
    assert super_catalan(2, 1) == 4
    assert super_catalan(0, 0) == 1
    assert super_catalan(0, 3) == 20
    assert super_catalan_matrix(7) == M_DISPLAY
    with pytest.raises(ValueError):
        super_catalan(-1, 0)


def test_trig_integral_values():
    assert trig_integral(2, 0) == Fraction(1, 2)
    assert trig_integral(2, 2) == Fraction(1, 8)
    assert trig_integral(3, 2) == 0
    assert trig_integral(0, 0) == 1
    assert trig_integral(0, 4) == Fraction(3, 8)


def test_integral_vs_oracle_range():
    # the constant-term oracle runs inside trig_integral on every call
    report = integral_recurrence_check(30, 30)
    assert report.ok, report.failures[:3]


def test_hypergeometric_sums():
    r = hypergeometric_sum_check(0)
    assert r.ok
    r = hypergeometric_sum_check(1)  # 2 = 1 + 1
    assert r.ok
    r = hypergeometric_sum_check(2)  # 8/3 = 1 + 2/3 + 1
    assert r.ok
    assert hypergeometric_sum_range(60).ok


def test_hand_expanded_m2_sum():
    total = Fraction(1) + Fraction(2 * 2, 6) + 1
    assert total == Fraction(4 ** 2, 6)


def test_lu_factorization():
    assert lu_factorization_check(1).ok
    report = lu_factorization_check(20)
    assert report.ok, report.failures[:3]
    # det of the 3x3 block is -4
    block = [row[:3] for row in M_DISPLAY[:3]]
    assert _bareiss_det(block) == -4


def test_lu_negative_control():
    bad = [row[:] for row in M_DISPLAY]
    bad[3][2] += 1
    report = lu_factorization_check(7, matrix=bad)
    assert not report.ok
    assert any(f.where == "(3, 2)" for f in report.failures)


def test_lower_binomial_matrix():
    assert lower_binomial_matrix(4) == [
        [1, 0, 0, 0],
        [2, 1, 0, 0],
        [6, 4, 1, 0],
        [20, 15, 6, 1],
    ]


def test_matrix_oracle_and_symmetry():
    assert moment_matrix_oracle_check(12).ok
    assert symmetry_check(40).ok
    assert partition_of_unity_check(60).ok
    assert integrality_check(25, 25).ok


def test_bareiss_on_known_matrices():
    assert _bareiss_det([[2, 0], [0, 3]]) == 6
    assert _bareiss_det([[0, 1], [1, 0]]) == -1
    assert _bareiss_det([[1, 2], [2, 4]]) == 0
