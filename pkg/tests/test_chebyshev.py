"""Chebyshev family tests."""

from fractions import Fraction

import pytest

from trigpoly.chebyshev import (
    brace,
    brace_check,
    brace_doubled,
    cheb_matrix,
    chebyshev_t,
    chebyshev_u,
    closed_form_check,
    depowering_check,
    generating_function_check,
    mnemonic_check,
    mnemonic_p_matrix,
    p_family,
    p_poly,
    parity_check,
    pyramidal_pattern_check,
    recursion_identity_check,
    t_closed_form,
    t_family,
    trig_values_suite,
    u_closed_form,
    v_poly,
    verify_trig_values,
)
from trigpoly.poly import Poly


def P(*coeffs):
    return Poly(coeffs)


def test_polynomial_values():
    assert chebyshev_t(0) == P(1)
    assert chebyshev_u(0) == P(1)
    assert chebyshev_t(4) == P(1, 0, -8, 0, 8)
    assert chebyshev_u(5) == P(0, 6, 0, -32, 0, 32)
    assert p_poly(0) == P(1)
    assert p_poly(1) == P(0, 1)
    assert p_poly(2) == P(-2, 0, 1)
    assert p_poly(4) == P(2, 0, -4, 0, 1)
    assert v_poly(3) == P(0, -2, 0, 1)


def test_closed_forms():
    assert t_closed_form(0) == P(1)
    assert t_closed_form(2) == P(-1, 0, 2)
    assert u_closed_form(4) == P(1, 0, -12, 0, 16)
    report = closed_form_check(60)
    assert report.ok, report.failures[:3]


def test_trig_values():
    assert verify_trig_values(1).ok
    assert verify_trig_values(4).ok
    report = trig_values_suite(40)
    assert report.ok, report.failures[:3]


def test_generating_functions():
    assert generating_function_check(1).ok
    report = generating_function_check(30)
    assert report.ok, report.failures[:3]


def test_generating_function_negative_control():
    polys = t_family(8)
    broken = list(polys)
    broken[5] = -broken[5]  # single sign mutation of T_5
    report = generating_function_check(8, t_polys=broken)
    assert not report.ok
    assert any(f.where == "t^5" for f in report.failures)


def test_mnemonic_matrix():
    assert mnemonic_p_matrix(1) == [[1]]
    got = mnemonic_p_matrix(3)
    assert [row[2] for row in got] == [-2, 0, 1]  # column for z^2 - 2
    assert mnemonic_p_matrix(9) == cheb_matrix("P", 9)
    assert mnemonic_check(12).ok


def test_cheb_matrix_layout():
    m = cheb_matrix("T", 5)
    assert [m[r][4] for r in range(5)] == [1, 0, -8, 0, 8]
    assert all(m[r][n] == 0 for r in range(5) for n in range(5) if (r + n) % 2)


def test_brace_values():
    assert brace(5, 0) == 16
    assert brace(0, 3) == -1
    assert brace(0, 0) == Fraction(1, 2)
    assert brace_doubled(0, 0) == 1
    # row reading of the T matrix: {2;1} lives at row 2, column 4
    assert brace(2, 1) == -8 == cheb_matrix("T", 5)[2][4]
    assert brace(4, 1) == -48
    assert brace_check(12).ok


def test_battery_checks():
    assert parity_check(200).ok
    assert recursion_identity_check(200).ok
    assert depowering_check(100).ok
    assert pyramidal_pattern_check(40).ok


def test_errors():
    with pytest.raises(ValueError):
        chebyshev_t(-1)
    with pytest.raises(ValueError):
        cheb_matrix("Q", 4)
    with pytest.raises(ValueError):
        brace(-1, 0)
