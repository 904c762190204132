"""Truncated series and Laurent polynomial tests."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trigpoly.laurent import Laurent, cosine, product_constant_term, sine
from trigpoly.rings import GaussianRational
from trigpoly.series import (
    ConstantTermZero,
    InnerConstantNonzero,
    TruncSeries,
    rational_series,
)


def test_geometric_inverse():
    s = TruncSeries((1, -1), 4)  # 1 - x
    assert s.inverse().coeffs == (1, 1, 1, 1, 1)


def test_catalan_square():
    from trigpoly.riordan import catalan_series

    c = catalan_series(3)
    assert (c * c).coeffs == (1, 2, 5, 14)


def test_compose_example():
    g = rational_series((1,), (1, -1), 3)       # 1/(1-x)
    f = rational_series((1,), (1, 2, 1), 3).shift(1)  # x/(1+x)^2
    assert g.compose(f).coeffs == (1, 1, -1, 0)


def test_compose_requires_zero_constant():
    g = TruncSeries((1, 1), 3)
    with pytest.raises(InnerConstantNonzero):
        g.compose(TruncSeries((1, 1), 3))


def test_inverse_requires_nonzero_constant():
    with pytest.raises(ConstantTermZero):
        TruncSeries((0, 1), 3).inverse()


def test_orders_truncate_to_minimum():
    a = TruncSeries((1, 2, 3, 4), 3)
    b = TruncSeries((1, 1), 1)
    assert (a + b).order == 1
    assert (a * b).order == 1
    assert (a * b).coeffs == (1, 3)


def test_shift_bookkeeping():
    s = TruncSeries((0, 1, 2), 2)
    assert s.shift(-1).order == 1
    assert s.shift(-1).coeffs == (1, 2)
    assert s.shift(1).order == 2
    assert s.shift(1).coeffs == (0, 0, 1)
    with pytest.raises(ValueError):
        TruncSeries((1, 1), 1).shift(-1)


def test_negative_powers():
    s = TruncSeries((1, -4), 4)
    assert s.pow(-1).coeffs == (1, 4, 16, 64, 256)
    assert (s.pow(-2) * s * s).coeffs == (1, 0, 0, 0, 0)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6).filter(lambda c: c[0] != 0))
def test_series_inverse_roundtrip(coeffs):
    s = TruncSeries(coeffs)
    assert (s * s.inverse()).coeffs == (Fraction(1),) + (Fraction(0),) * s.order


def test_laurent_constant_terms():
    zp = Laurent({1: 1, -1: 1})
    assert zp.constant_term() == 0
    assert (zp * zp).constant_term() == 2
    # (z + 1/z)^2 * (-(z - 1/z)^2) has constant term 2
    zm_sq = Laurent({2: -1, 0: 2, -2: -1})
    assert ((zp * zp) * zm_sq).constant_term() == 2


def test_laurent_variable_inversion_fixes_constant_term():
    p = Laurent({3: 2, 0: 7, -1: 5})
    assert p.invert_variable().constant_term() == p.constant_term()
    assert p.invert_variable().coefficient(1) == 5


def test_laurent_exponent_range():
    p = Laurent({2: 1, -3: 4})
    assert p.max_exp() == 2 and p.min_exp() == -3
    assert (p - p).is_zero()


def test_cosine_sine_representatives():
    assert cosine(3) == Laurent({3: Fraction(1, 2), -3: Fraction(1, 2)})
    s = sine(1)
    assert (s * s).is_real()
    # sin^2 = (1 - cos(2 theta))/2
    assert s * s == (1 - cosine(2)) * Fraction(1, 2)


def test_gaussian_laurent_mixing():
    i = GaussianRational(0, 1)
    p = Laurent({1: i, -1: -i})
    q = p * p
    assert q.is_real()
    assert q.constant_term() == 2


def test_product_constant_term_shortcut():
    a = Laurent({3: 2, -1: 5, 0: 1})
    b = Laurent({-3: 7, 1: 4, 2: 9})
    assert product_constant_term(a, b) == (a * b).constant_term()
    assert product_constant_term(a, Laurent()) == 0
