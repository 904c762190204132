"""The Riordan group over truncated rational power series.

A Riordan array is a pair (g, f) with f(0) = 0 and f'(0) != 0; its matrix
view has entry (n, k) = [x^n] g * f^k.  The group law is
(g1, f1) * (g2, f2) = (g1 * (g2 o f1), f2 o f1) with identity (1, x) and
inverse (1/(g o fbar), fbar), where fbar is the compositional inverse
computed here by Lagrange inversion.
"""

from __future__ import annotations

from fractions import Fraction

from .checks import CheckReport
from .combinatorics import binomial, catalan, central_binomial, fuss_catalan
from .series import TruncSeries, rational_series

DEFAULT_ORDER = 64


class NotProper(ValueError):
    """Riordan array with g(0) = 0 cannot be inverted."""


class NotInvertible(ValueError):
    """Series is not compositionally invertible (needs f(0)=0, f'(0)!=0)."""


class OrderMismatch(ValueError):
    """Riordan operations require both arrays at the same order."""


def lagrange_invert(f: TruncSeries) -> TruncSeries:
    """Compositional inverse of f, via [y^n] fbar = (1/n) [x^(n-1)] phi^n
    where f = x/phi."""
    if f.coefficient(0) != 0:
        raise NotInvertible("constant term must vanish")
    if f.coefficient(1) == 0:
        raise NotInvertible("linear coefficient must be nonzero")
    n_max = f.order
    phi = f.shift(-1).inverse()  # phi = x/f as a series of order n_max - 1
    coeffs = [Fraction(0)] * (n_max + 1)
    power = TruncSeries.one(phi.order)
    for n in range(1, n_max + 1):
        power = power * phi
        coeffs[n] = power.coefficient(n - 1) / n
    return TruncSeries(coeffs, n_max)


class RiordanArray:
    __slots__ = ("g", "f")

    def __init__(self, g: TruncSeries, f: TruncSeries):
        if f.coefficient(0) != 0:
            raise ValueError("f must have zero constant term")
        order = min(g.order, f.order)
        self.g = g.truncate(order)
        self.f = f.truncate(order)

    @property
    def order(self) -> int:
        return self.g.order

    @classmethod
    def identity(cls, order: int) -> RiordanArray:
        return cls(TruncSeries.one(order), TruncSeries.x(order))

    def is_proper(self) -> bool:
        return self.g.coefficient(0) != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return self.g == other.g and self.f == other.f

    def __mul__(self, other: RiordanArray) -> RiordanArray:
        if not isinstance(other, RiordanArray):
            return NotImplemented
        if self.order != other.order:
            raise OrderMismatch(f"{self.order} != {other.order}")
        return RiordanArray(self.g * other.g.compose(self.f),
                            other.f.compose(self.f))

    def inverse(self) -> RiordanArray:
        if not self.is_proper():
            raise NotProper("g(0) = 0")
        fbar = lagrange_invert(self.f)
        return RiordanArray(self.g.compose(fbar).inverse(), fbar)

    def apply(self, h: TruncSeries) -> TruncSeries:
        """Fundamental theorem action: the series g * (h o f), equal to the
        matrix view acting on h's coefficient column."""
        if h.order != self.order:
            raise OrderMismatch(f"{h.order} != {self.order}")
        return self.g * h.compose(self.f)

    def matrix(self, size: int) -> list[list[Fraction]]:
        """size x size lower-triangular view, entry (n, k) = [x^n] g f^k."""
        if size < 1 or size - 1 > self.order:
            raise ValueError("size out of range for this order")
        column = self.g
        out = [[Fraction(0)] * size for _ in range(size)]
        for k in range(size):
            for n in range(size):
                out[n][k] = column.coefficient(n)
            if k + 1 < size:
                column = column * self.f
        return out

    def __repr__(self) -> str:
        return f"RiordanArray(g={self.g!r}, f={self.f!r})"


def catalan_series(order: int) -> TruncSeries:
    return TruncSeries.from_function(catalan, order)


def central_binomial_series(order: int) -> TruncSeries:
    return TruncSeries.from_function(central_binomial, order)


def generalized_binomial_series(p: int, order: int, r: int = 1) -> TruncSeries:
    """sum_m F_m(p, r) x^m; r = 1 gives the generalized binomial series."""
    return TruncSeries.from_function(lambda m: fuss_catalan(m, p, r), order)


def x_catalan_squared(order: int) -> TruncSeries:
    """The series x*C(x)^2 = C(x) - 1."""
    c = catalan_series(order)
    return (c * c).shift(1)


def _catalan_arrays(order: int) -> dict[str, RiordanArray]:
    c = catalan_series(order)
    b = central_binomial_series(order)
    xc2 = x_catalan_squared(order)
    return {
        "C": RiordanArray(c, xc2),
        "C2": RiordanArray(c * c, xc2),
        "B": RiordanArray(b, xc2),
        "BC": RiordanArray(b * c, xc2),
    }


def _expected_inverses(order: int) -> dict[str, RiordanArray]:
    inv_1px = rational_series((1,), (1, 1), order)         # 1/(1+x)
    inv_1px2 = rational_series((1,), (1, 2, 1), order)     # 1/(1+x)^2
    frac = rational_series((1, -1), (1, 1), order)         # (1-x)/(1+x)
    frac2 = rational_series((1, -1), (1, 2, 1), order)     # (1-x)/(1+x)^2
    f = inv_1px2.shift(1)                                  # x/(1+x)^2
    return {
        "C": RiordanArray(inv_1px, f),
        "C2": RiordanArray(inv_1px2, f),
        "B": RiordanArray(frac, f),
        "BC": RiordanArray(frac2, f),
    }


def inversion_theorem_check(order: int) -> CheckReport:
    """The four Riordan inversions built on (., xC^2), plus the proof step
    C(x/(1+x)^2) = 1+x and the product lemma on those arrays."""
    report = CheckReport(f"riordan inversions order {order}")
    arrays = _catalan_arrays(order)
    expected = _expected_inverses(order)
    ident = RiordanArray.identity(order)
    for tag, array in arrays.items():
        inv = array.inverse()
        report.record(inv == expected[tag], f"({tag}, xC^2)^-1 closed form", tag,
                      "series mismatch")
        report.record(array * expected[tag] == ident, f"({tag}) * inverse = (1, x)",
                      tag, "product is not the identity")

    c = catalan_series(order)
    f = rational_series((1,), (1, 2, 1), order).shift(1)
    report.expect_equal(c.compose(f), TruncSeries((1, 1), order),
                        "C(x/(1+x)^2) = 1 + x", order)

    # product lemma: (g1 g2, f)^-1 = (G1 G2, F) on all pairs
    for t1 in ("C", "B"):
        for t2 in ("C", "BC"):
            combined = RiordanArray(arrays[t1].g * arrays[t2].g, arrays[t1].f)
            expect = RiordanArray(expected[t1].g * expected[t2].g, expected[t1].f)
            report.record(combined.inverse() == expect, "product lemma",
                          f"{t1}*{t2}", "inverse mismatch")
    return report


def matrix_vs_triangles_check(order: int, size: int | None = None) -> CheckReport:
    """Matrix views of (C, xC^2) and (C^2, xC^2) equal the odd and even
    Catalan triangles."""
    from .combinatorics import even_triangle, odd_triangle

    if size is None:
        size = min(order + 1, 12)
    report = CheckReport(f"riordan matrices vs triangles size {size}")
    arrays = _catalan_arrays(order)
    report.expect_equal(arrays["C"].matrix(size),
                        [[Fraction(v) for v in row] for row in odd_triangle(size)],
                        "(C, xC^2) = odd triangle", size)
    report.expect_equal(arrays["C2"].matrix(size),
                        [[Fraction(v) for v in row] for row in even_triangle(size)],
                        "(C^2, xC^2) = even triangle", size)
    ident = RiordanArray.identity(order)
    report.expect_equal(ident.matrix(size),
                        [[Fraction(1) if i == j else Fraction(0) for j in range(size)]
                         for i in range(size)],
                        "(1, x) matrix is identity", size)
    return report


def binomial_series_identity(n: int, m: int, order: int) -> CheckReport:
    """sum_j binomial(2j + n, j - m) x^j = B C^n (C - 1)^m as series."""
    if m < 0:
        raise ValueError("m must be >= 0")
    report = CheckReport(f"binomial series n={n} m={m} order {order}")
    c = catalan_series(order)
    b = central_binomial_series(order)
    rhs = b * c.pow(n) * (c - TruncSeries.one(order)).pow(m)
    lhs = TruncSeries([binomial(2 * j + n, j - m) if j >= m else 0
                       for j in range(order + 1)], order)
    for j in range(order + 1):
        report.record(lhs.coefficient(j) == rhs.coefficient(j),
                      "binomial series coefficient", f"x^{j}",
                      f"got {rhs.coefficient(j)}, want {lhs.coefficient(j)}")
    return report


def fundamental_theorem_check(order: int) -> CheckReport:
    """Spot checks of the action g*(h o f) against the matrix view."""
    report = CheckReport(f"fundamental theorem order {order}")
    arrays = _catalan_arrays(order)
    ones = rational_series((1,), (1, -1), order)

    a = arrays["C"]
    applied = a.apply(ones)
    size = min(order + 1, 10)
    m = a.matrix(size)
    for n in range(size):
        row_sum = sum(m[n][: n + 1])
        report.expect_equal(applied.coefficient(n), row_sum,
                            "apply matches matrix row sums", n)
    # those row sums are the central binomial numbers
    for n in range(size):
        report.expect_equal(applied.coefficient(n), central_binomial(n),
                            "odd triangle row sums", n)

    ident = RiordanArray.identity(order)
    report.record(ident.apply(ones) == ones, "(1, x) acts as identity", order)
    return report


def sign_flip_check(order: int) -> CheckReport:
    """(g, f) * (1, -x) = (g, -f) and (1, -x) * (g, f) = (g(-x), f(-x))."""
    report = CheckReport(f"sign flip order {order}")
    arrays = _catalan_arrays(order)
    neg = RiordanArray(TruncSeries.one(order), -TruncSeries.x(order))
    a = arrays["C"]
    report.record(a * neg == RiordanArray(a.g, -a.f), "right flip negates f",
                  order)
    minus_x = -TruncSeries.x(order)
    pulled = neg * a
    report.record(pulled == RiordanArray(a.g.compose(minus_x), a.f.compose(minus_x)),
                  "left flip pulls back by -x", order)
    return report


def zpread_riordan_check(order: int) -> CheckReport:
    """((1+x)/(1-x)^3, -x/(1-x)^2) * (B C^2, -x C^2) = (1, x); the left
    factor is the transposed zpread matrix."""
    report = CheckReport(f"zpread riordan inverse order {order}")
    g = rational_series((1, 1), (1, -3, 3, -1), order)
    f = -rational_series((1,), (1, -2, 1), order).shift(1)
    left = RiordanArray(g, f)
    c = catalan_series(order)
    b = central_binomial_series(order)
    right = RiordanArray(b * c * c, -x_catalan_squared(order))
    report.record(left * right == RiordanArray.identity(order),
                  "zpread transpose inverse", order, "product != (1, x)")
    return report


def group_axioms_check(order: int, samples: int = 4, seed: int = 7) -> CheckReport:
    """Associativity and the inverse law on pseudo-random proper arrays."""
    import random

    rng = random.Random(seed)

    def random_array() -> RiordanArray:
        g = [rng.randint(1, 3)] + [rng.randint(-3, 3) for _ in range(order)]
        f = [0, rng.choice((1, -1, 2))] + [rng.randint(-3, 3) for _ in range(order - 1)]
        return RiordanArray(TruncSeries(g, order), TruncSeries(f, order))

    report = CheckReport(f"group axioms order {order}")
    ident = RiordanArray.identity(order)
    for i in range(samples):
        a, b, c = random_array(), random_array(), random_array()
        report.record((a * b) * c == a * (b * c), "associativity", i)
        report.record(a * a.inverse() == ident, "right inverse", i)
        report.record(a.inverse() * a == ident, "left inverse", i)
    return report


def suite(order: int) -> list[CheckReport]:
    reports = [
        inversion_theorem_check(order),
        matrix_vs_triangles_check(order),
        fundamental_theorem_check(order),
        sign_flip_check(order),
        zpread_riordan_check(order),
        group_axioms_check(min(order, 20)),
    ]
    grid = CheckReport(f"binomial series grid order {order}")
    for n in (-1, 0, 1, 2):
        for m in (0, 1, 2):
            grid.merge(binomial_series_identity(n, m, order))
    reports.append(grid)
    return reports
