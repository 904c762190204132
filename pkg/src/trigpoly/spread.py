"""Spread polynomials and their integer rescaling.

The spread polynomials S_n satisfy S_n(sin^2 theta) = sin^2(n theta) and
the recursion S_n = 2(1-2x) S_{n-1} - S_{n-2} + 2x.  The zpread family
Z_n(x) = 4 S_n(x/4) trades the powers of four for integer coefficients
and satisfies Z_n(4 sin^2 theta) = 4 sin^2(n theta); rescaling the
recursion gives Z_n = (2-x) Z_{n-1} - Z_{n-2} + 2x, which is the internal
canonical construction.  S_n is recovered by rescaling on demand.
"""

from __future__ import annotations

from math import comb

from .chebyshev import p_family, t_family, u_family, v_family
from .checks import CheckReport
from .combinatorics import pyramidal
from .poly import Poly
from .series import rational_series


def zpread_family(n_max: int) -> list[Poly]:
    """[Z_0, ..., Z_n_max] by the integer recursion
    Z_n = (2 - x) Z_{n-1} - Z_{n-2} + 2x."""
    out = [Poly(), Poly((0, 1))]
    two_minus_x = Poly((2, -1))
    two_x = Poly((0, 2))
    for _ in range(2, n_max + 1):
        out.append(two_minus_x * out[-1] - out[-2] + two_x)
    return out[: n_max + 1]


def spread_family(n_max: int) -> list[Poly]:
    """[S_0, ..., S_n_max] by the spread recursion itself."""
    out = [Poly(), Poly((0, 1))]
    lead = Poly((2, -4))  # 2(1 - 2x)
    two_x = Poly((0, 2))
    for _ in range(2, n_max + 1):
        out.append(lead * out[-1] - out[-2] + two_x)
    return out[: n_max + 1]


def spread_poly(n: int) -> Poly:
    """S_n from the recursion, checked against (1 - T_n(1 - 2x))/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    s = spread_family(n)[n]
    num = 1 - t_family(n)[n].compose(Poly((1, -2)))
    if num != 2 * s:
        raise ArithmeticError(f"S_{n} disagrees with (1 - T_n(1-2x))/2")
    return s


def zpread_poly(n: int) -> Poly:
    """Z_n = 4 S_n(x/4), asserted to be integral."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return spread_poly(n).rescale_arg(1, 4, scale=4).as_integer()


def spread_matrix(size: int) -> list[list[int]]:
    """Entry (m, n), 1-based, is the x^m coefficient of S_n."""
    fam = spread_family(size)
    return [[fam[n][m] for n in range(1, size + 1)] for m in range(1, size + 1)]


def zpread_matrix(size: int) -> list[list[int]]:
    """Entry (m, n), 1-based, is the x^m coefficient of Z_n."""
    fam = zpread_family(size)
    return [[fam[n][m] for n in range(1, size + 1)] for m in range(1, size + 1)]


def zpread_matrix_check(size: int, family=None) -> CheckReport:
    """Z entries are signed even-dimensional pyramidal numbers,
    Z_{mn} = (-1)^(m+1) p_{n-m}^{[2m]}, and the transposed matrix is the
    Riordan array ((1+x)/(1-x)^3, -x/(1-x)^2)."""
    report = CheckReport(f"zpread matrix size {size}")
    fam = family if family is not None else zpread_family(size)
    for n in range(1, size + 1):
        for m in range(1, n + 1):
            got = fam[n][m]
            want = (-1) ** (m + 1) * pyramidal(2 * m, n - m)
            report.record(got == want, "pyramidal entry", (m, n),
                          f"got {got}, want {want}")

    order = size - 1
    g = rational_series((1, 1), (1, -3, 3, -1), order)
    f = -rational_series((1,), (1, -2, 1), order).shift(1)
    column = g
    for k in range(size):
        for n in range(size):
            want = fam[n + 1][k + 1]
            report.record(column.coefficient(n) == want,
                          "transpose as Riordan array", (n, k),
                          f"got {column.coefficient(n)}, want {want}")
        if k + 1 < size:
            column = column * f
    return report


def hirschhorn_gf_check(order: int, family=None) -> CheckReport:
    """Hirschhorn's bivariate generating function, cross-multiplied:
    (1-t)(1 - 2t + t^2 + 4tx) * sum S_n(x) t^n = tx(1+t)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    report = CheckReport(f"spread generating function order {order}")
    fam = family if family is not None else spread_family(order)
    x = Poly((0, 1))
    one = Poly((1,))
    # (1-t)(1 - 2t + t^2 + 4tx) as polynomials in x, by powers of t
    den = [one, Poly((-3, 4)), Poly((3, -4)), -one]
    got = [Poly() for _ in range(order + 1)]
    for i, d in enumerate(den):
        for n in range(order + 1 - i):
            got[i + n] = got[i + n] + d * fam[n]
    rhs = {1: x, 2: x}
    for n in range(order + 1):
        want = rhs.get(n, Poly())
        report.record(got[n] == want, "generating function", f"t^{n}",
                      f"got {got[n]}, want {want}")
    return report


def sqsin_reduction_check(n: int) -> CheckReport:
    """4^(n-1) s^n = sum_{k=1}^n (-1)^(k-1) C(2n, n-k) S_k(s), the exact
    power reduction of sin^(2n) written in s = sin^2(theta)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    report = CheckReport(f"sin^2n reduction n={n}")
    fam = spread_family(n)
    rhs = Poly()
    for k in range(1, n + 1):
        rhs = rhs + (-1) ** (k - 1) * comb(2 * n, n - k) * fam[k]
    lhs = Poly((0,) * n + (4 ** (n - 1),))
    report.expect_equal(rhs, lhs, "reduction", n)
    return report


def sqsin_reduction_range(n_max: int) -> CheckReport:
    report = CheckReport(f"sin^2n reductions n<={n_max}")
    fam = spread_family(n_max)
    for n in range(1, n_max + 1):
        rhs = Poly()
        for k in range(1, n + 1):
            rhs = rhs + (-1) ** (k - 1) * comb(2 * n, n - k) * fam[k]
        lhs = Poly((0,) * n + (4 ** (n - 1),))
        report.expect_equal(rhs, lhs, "reduction", n)
    return report


def signed_binomial_matrix(size: int) -> list[list[int]]:
    """Entry (k, n), 1-based: (-1)^(k-1) C(2n, n-k), expressing the n-th
    power of 4 sin^2(theta) over the multiples 4 sin^2(k theta)."""
    return [[(-1) ** (k - 1) * comb(2 * n, n - k) if k <= n else 0
             for n in range(1, size + 1)] for k in range(1, size + 1)]


def zpread_inverse_check(size: int, family=None) -> CheckReport:
    """The signed binomial matrix and the zpread matrix are mutually
    inverse transition matrices."""
    report = CheckReport(f"zpread inverse pair size {size}")
    a = signed_binomial_matrix(size)
    fam = family if family is not None else zpread_family(size)
    z = [[fam[n][m] for n in range(1, size + 1)] for m in range(1, size + 1)]
    for left, right, tag in ((z, a, "Z * A"), (a, z, "A * Z")):
        for i in range(size):
            for j in range(size):
                got = sum(left[i][k] * right[k][j] for k in range(size))
                want = 1 if i == j else 0
                report.record(got == want, tag, (i, j), f"got {got}")
    return report


def spreadometric_check(order: int, family=None) -> CheckReport:
    """(1+x)/(1-x) * s/((1-x)^2 + 4xs) = sum S_{n+1}(s) x^n, verified by
    cross-multiplication as a series in x over polynomials in s, plus the
    s = 1 specialization to the geometric series 1/(1 - x^2)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    report = CheckReport(f"spreadometric series order {order}")
    fam = family if family is not None else spread_family(order + 1)
    s = Poly((0, 1))
    one = Poly((1,))
    # (1-x)((1-x)^2 + 4sx) by powers of x
    den = [one, Poly((-3, 4)), Poly((3, -4)), -one]
    got = [Poly() for _ in range(order + 1)]
    for i, d in enumerate(den):
        for n in range(order + 1 - i):
            got[i + n] = got[i + n] + d * fam[n + 1]
    rhs = {0: s, 1: s}
    for n in range(order + 1):
        want = rhs.get(n, Poly())
        report.record(got[n] == want, "cross-multiplied series", f"x^{n}",
                      f"got {got[n]}, want {want}")
    for n in range(order + 1):
        value = fam[n + 1](1)
        want = 1 if n % 2 == 0 else 0
        report.expect_equal(value, want, "s = 1 specialization", n)
    return report


def cigler_check(n: int) -> CheckReport:
    """Cigler's square identities:
       S_2n(x^2) = (1 - x^2) U_{2n-1}(x)^2,  S_{2n+1}(x^2) = T_{2n+1}(x)^2,
    and their integer zpread forms
       Z_2n(x^2) = (4 - x^2) V_{2n-1}(x)^2,  Z_{2n+1}(x^2) = P_{2n+1}(x)^2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    report = CheckReport(f"cigler identities n={n}")
    _cigler(report, n, spread_family(2 * n + 1), zpread_family(2 * n + 1),
            t_family(2 * n + 1), u_family(2 * n + 1),
            p_family(2 * n + 1), v_family(2 * n + 1))
    return report


def _cigler(report, n, sfam, zfam, ts, us, ps, vs) -> None:
    xsq = Poly((0, 0, 1))
    even = sfam[2 * n].compose(xsq)
    report.expect_equal(even, Poly((1, 0, -1)) * us[2 * n - 1] ** 2,
                        "S even square", n)
    odd = sfam[2 * n + 1].compose(xsq)
    report.expect_equal(odd, ts[2 * n + 1] ** 2, "S odd square", n)
    report.expect_equal(zfam[2 * n].compose(xsq),
                        Poly((4, 0, -1)) * vs[2 * n - 1] ** 2,
                        "Z even square", n)
    report.expect_equal(zfam[2 * n + 1].compose(xsq), ps[2 * n + 1] ** 2,
                        "Z odd square", n)


def cigler_range(n_max: int) -> CheckReport:
    report = CheckReport(f"cigler identities n<={n_max}")
    top = 2 * n_max + 1
    sfam, zfam = spread_family(top), zpread_family(top)
    ts, us = t_family(top), u_family(top)
    ps, vs = p_family(top), v_family(top)
    for n in range(1, n_max + 1):
        _cigler(report, n, sfam, zfam, ts, us, ps, vs)
    return report


def composition_check(n_max: int) -> CheckReport:
    """Z_m(Z_n(x)) = Z_{mn}: composing rotations multiplies the indices."""
    report = CheckReport(f"zpread composition m,n<={n_max}")
    fam = zpread_family(n_max * n_max)
    for m in range(n_max + 1):
        for n in range(n_max + 1):
            got = fam[m].compose(fam[n])
            report.expect_equal(got, fam[m * n], "composition", (m, n))
    return report


def endpoint_check(n_max: int) -> CheckReport:
    """Z_n(0) = 0; Z_n(4) = 0 for even n and 4 for odd n; the leading
    coefficient of Z_n is (-1)^(n+1) with degree n."""
    report = CheckReport(f"zpread endpoints n<={n_max}")
    fam = zpread_family(n_max)
    for n in range(1, n_max + 1):
        report.expect_equal(fam[n](0), 0, "Z(0)", n)
        report.expect_equal(fam[n](4), 0 if n % 2 == 0 else 4, "Z(4)", n)
        report.expect_equal(fam[n].degree(), n, "degree", n)
        report.expect_equal(fam[n].leading(), (-1) ** (n + 1), "leading", n)
    return report


def proposition_check(n_max: int) -> CheckReport:
    """S_n = (1 - T_n(1 - 2x))/2 across the whole family."""
    report = CheckReport(f"spread vs Chebyshev n<={n_max}")
    sfam = spread_family(n_max)
    ts = t_family(n_max)
    down = Poly((1, -2))
    for n in range(n_max + 1):
        lhs = 2 * sfam[n]
        rhs = 1 - ts[n].compose(down)
        report.expect_equal(lhs, rhs, "proposition", n)
    return report


def suite(order: int) -> list[CheckReport]:
    return [
        zpread_matrix_check(order),
        hirschhorn_gf_check(order),
        sqsin_reduction_range(min(order, 40)),
        zpread_inverse_check(order),
        spreadometric_check(min(order, 15)),
        cigler_range(min(order, 50)),
        composition_check(min(order, 12)),
        endpoint_check(min(order, 100)),
        proposition_check(min(order, 200)),
    ]
