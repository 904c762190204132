"""Spread and zpread family tests."""

import pytest

from trigpoly.poly import Poly
from trigpoly.spread import (
    cigler_check,
    cigler_range,
    composition_check,
    endpoint_check,
    hirschhorn_gf_check,
    proposition_check,
    signed_binomial_matrix,
    spread_family,
    spread_matrix,
    spread_poly,
    spreadometric_check,
    sqsin_reduction_check,
    sqsin_reduction_range,
    zpread_family,
    zpread_inverse_check,
    zpread_matrix,
    zpread_matrix_check,
    zpread_poly,
)


def P(*coeffs):
    return Poly(coeffs)


def test_polynomial_values():
    assert spread_poly(0) == P()
    assert spread_poly(2) == P(0, 4, -4)
    assert spread_poly(3) == P(0, 9, -24, 16)
    assert zpread_poly(1) == P(0, 1)
    assert zpread_poly(2) == P(0, 4, -1)
    assert zpread_poly(3) == P(0, 9, -6, 1)
    assert zpread_family(4)[4] == P(0, 16, -20, 8, -1)


def test_families_consistent():
    zfam = zpread_family(60)
    sfam = spread_family(60)
    for n in range(61):
        assert zfam[n] == sfam[n].rescale_arg(1, 4, scale=4).as_integer()
        assert zpread_poly(n) == zfam[n] if n <= 12 else True


def test_matrices():
    z = zpread_matrix(5)
    assert z == [
        [1, 4, 9, 16, 25],
        [0, -1, -6, -20, -50],
        [0, 0, 1, 8, 35],
        [0, 0, 0, -1, -10],
        [0, 0, 0, 0, 1],
    ]
    s = spread_matrix(4)
    assert s == [
        [1, 4, 9, 16],
        [0, -4, -24, -80],
        [0, 0, 16, 128],
        [0, 0, 0, -64],
    ]
    assert signed_binomial_matrix(5) == [
        [1, 4, 15, 56, 210],
        [0, -1, -6, -28, -120],
        [0, 0, 1, 8, 45],
        [0, 0, 0, -1, -10],
        [0, 0, 0, 0, 1],
    ]


def test_zpread_matrix_check():
    assert zpread_matrix_check(1).ok
    report = zpread_matrix_check(30)
    assert report.ok, report.failures[:3]


def test_hirschhorn():
    assert hirschhorn_gf_check(1).ok
    report = hirschhorn_gf_check(20)
    assert report.ok, report.failures[:3]


def test_hirschhorn_negative_control():
    fam = list(spread_family(8))
    bad = list(fam[4].coeffs)
    bad[2] += 1  # single coefficient mutation of S_4
    fam[4] = Poly(bad)
    report = hirschhorn_gf_check(8, family=fam)
    assert not report.ok
    assert report.failures[0].where == "t^4"


def test_sqsin_reduction():
    assert sqsin_reduction_check(1).ok
    assert sqsin_reduction_check(2).ok
    assert sqsin_reduction_range(40).ok


def test_zpread_inverse():
    assert zpread_inverse_check(1).ok
    assert zpread_inverse_check(2).ok
    report = zpread_inverse_check(30)
    assert report.ok, report.failures[:3]


def test_spreadometric():
    report = spreadometric_check(15)
    assert report.ok, report.failures[:3]


def test_cigler():
    # S_2(x^2) = 4x^2 - 4x^4 = (1 - x^2)(2x)^2, S_3(x^2) = (4x^3 - 3x)^2
    assert spread_family(2)[2].compose(P(0, 0, 1)) == P(0, 0, 4, 0, -4)
    assert cigler_check(1).ok
    assert cigler_range(50).ok


def test_composition_and_endpoints():
    assert composition_check(12).ok
    assert endpoint_check(100).ok
    assert proposition_check(200).ok


def test_errors():
    with pytest.raises(ValueError):
        spread_poly(-1)
    with pytest.raises(ValueError):
        sqsin_reduction_check(0)
    with pytest.raises(ValueError):
        hirschhorn_gf_check(0)
