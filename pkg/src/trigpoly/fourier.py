"""Exact trigonometric moment integrals and the super Catalan matrix.

M[k][l] is the normalized integral of (2cos)^(2k) (2sin)^(2l) over a
period; its entries are the super Catalan numbers
(2k)!(2l)!/(k!l!(k+l)!), it factors as L diag(1,-2,2,-2,...) L^T with
L[i][j] = binomial(2i, i-j), and it is reproduced independently here as
Laurent constant terms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .basechange import kappa_multiple, sigma_squared
from .checks import CheckReport
from .laurent import Laurent, cosine, product_constant_term, sine


def super_catalan(k: int, l: int) -> int:
    """(2k)!(2l)!/(k!l!(k+l)!), asserted integral on every call.

    For k >= 1 the equivalent binomial-ratio form
    C(k+l-1, l) C(2(k+l), k+l) / C(2(k+l)-1, 2l) is validated too; at
    k = 0 that ratio degenerates to 0/0 and only the factorial form
    applies.
    """
    if k < 0 or l < 0:
        raise ValueError("indices must be >= 0")
    num = factorial(2 * k) * factorial(2 * l)
    den = factorial(k) * factorial(l) * factorial(k + l)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"super Catalan number ({k}, {l}) not integral")
    if k >= 1:
        ratio = Fraction(comb(k + l - 1, l) * comb(2 * (k + l), k + l),
                         comb(2 * (k + l) - 1, 2 * l))
        if ratio != q:
            raise ArithmeticError(
                f"binomial-ratio form disagrees at ({k}, {l}): {ratio} != {q}")
    return q


def super_catalan_matrix(size: int) -> list[list[int]]:
    return [[super_catalan(k, l) for l in range(size)] for k in range(size)]


@lru_cache(maxsize=None)
def _cos_power(n: int) -> Laurent:
    return cosine(1) ** n


@lru_cache(maxsize=None)
def _sin_power(m: int) -> Laurent:
    return sine(1) ** m


def trig_integral(n: int, m: int) -> Fraction:
    """(1/2pi) * integral of cos^n sin^m over a period, exactly.

    Zero when either exponent is odd; for n = 2k, m = 2l the value is
    the super Catalan number M[k][l] scaled by 4^-(k+l).  Every call is
    cross-checked against the Laurent constant term of the integrand.
    """
    if n < 0 or m < 0:
        raise ValueError("exponents must be >= 0")
    if n % 2 or m % 2:
        closed = Fraction(0)
    else:
        k, l = n // 2, m // 2
        closed = Fraction(super_catalan(k, l), 4 ** (k + l))
    oracle = product_constant_term(_cos_power(n), _sin_power(m))
    if oracle != closed:
        raise ArithmeticError(
            f"integral ({n}, {m}): closed form {closed} != constant term {oracle}")
    return closed


def integral_recurrence_check(n_max: int, m_max: int) -> CheckReport:
    """Partial-integration recurrence (m+1) I(n, m) = (n-1) I(n-2, m+2)."""
    report = CheckReport(f"integral recurrence n<={n_max} m<={m_max}")
    for n in range(1, n_max + 1):
        for m in range(m_max + 1):
            lhs = (m + 1) * trig_integral(n, m)
            rhs = (n - 1) * trig_integral(n - 2, m + 2) if n >= 2 else Fraction(0)
            report.expect_equal(lhs, rhs, "partial integration", (n, m))
    return report


def hypergeometric_sum_check(m: int) -> CheckReport:
    """4^m / C(2m, m) = sum_{l=0}^m C(m-1, l) C(m, l) / C(2m-1, 2l).

    The l = m summand is 0/0 as a ratio and is defined to be 1 (it is the
    k = 0 moment term).  Cross-checked in integers against
    sum_l C(m, l) * SC(m-l, l) = 4^m.
    """
    report = CheckReport(f"hypergeometric sum m={m}")
    total = Fraction(0)
    for l in range(m + 1):
        if l == m:
            total += 1
        else:
            total += Fraction(comb(m - 1, l) * comb(m, l), comb(2 * m - 1, 2 * l))
    lhs = Fraction(4 ** m, comb(2 * m, m))
    report.expect_equal(total, lhs, "rational sum", m)
    integer_sum = sum(comb(m, l) * super_catalan(m - l, l) for l in range(m + 1))
    report.expect_equal(integer_sum, 4 ** m, "super Catalan sum", m)
    return report


def hypergeometric_sum_range(m_max: int) -> CheckReport:
    report = CheckReport(f"hypergeometric sums m<={m_max}")
    for m in range(m_max + 1):
        report.merge(hypergeometric_sum_check(m))
    return report


def lower_binomial_matrix(size: int) -> list[list[int]]:
    """L[i][j] = binomial(2i, i-j), lower triangular."""
    return [[comb(2 * i, i - j) if j <= i else 0 for j in range(size)]
            for i in range(size)]


def _bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def lu_factorization_check(size: int, matrix=None) -> CheckReport:
    """M = L diag(1, -2, 2, -2, ...) L^T at the given size, and the leading
    principal determinants det M^(n) = (-1)^floor(n/2) * 2^(n-1).

    Determinants come from the diagonal factor; a fraction-free
    elimination cross-checks them for n <= 12.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    report = CheckReport(f"LU factorization size {size}")
    m = matrix if matrix is not None else super_catalan_matrix(size)
    lower = lower_binomial_matrix(size)
    diag = [1] + [2 * (-1) ** i for i in range(1, size)]
    for i in range(size):
        for j in range(size):
            got = sum(lower[i][k] * diag[k] * lower[j][k]
                      for k in range(min(i, j) + 1))
            report.record(got == m[i][j], "L D L^T entry", (i, j),
                          f"got {got}, want {m[i][j]}")
    det = 1
    for n in range(1, size + 1):
        det *= diag[n - 1]
        want = (-1) ** (n // 2) * 2 ** (n - 1)
        report.expect_equal(det, want, "determinant from factorization", n)
        if n <= 12:
            block = [row[:n] for row in m[:n]]
            report.expect_equal(_bareiss_det(block), want,
                                "determinant by elimination", n)
    return report


def moment_matrix_oracle_check(size: int) -> CheckReport:
    """Second, independent construction of M: entry (k, l) as the constant
    term of kappa^(2k) sigma^(2l) in integer Laurent arithmetic."""
    report = CheckReport(f"moment matrix vs constant terms size {size}")
    kappa = kappa_multiple(1)
    ssq = sigma_squared()
    kpows: list[Laurent] = [Laurent.term(1)]
    for _ in range(size - 1):
        kpows.append(kpows[-1] * kappa * kappa)
    spows: list[Laurent] = [Laurent.term(1)]
    for _ in range(size - 1):
        spows.append(spows[-1] * ssq)
    for k in range(size):
        for l in range(size):
            got = (kpows[k] * spows[l]).constant_term()
            want = super_catalan(k, l)
            report.record(got == want, "constant term entry", (k, l),
                          f"got {got}, want {want}")
    return report


def symmetry_check(size: int) -> CheckReport:
    report = CheckReport(f"moment matrix symmetry size {size}")
    m = super_catalan_matrix(size)
    for k in range(size):
        report.expect_equal(m[0][k], comb(2 * k, k), "first row is central binomials", k)
        for l in range(k + 1, size):
            report.expect_equal(m[k][l], m[l][k], "symmetry", (k, l))
    return report


def integrality_check(k_max: int, l_max: int) -> CheckReport:
    report = CheckReport(f"super Catalan integrality k<={k_max} l<={l_max}")
    for k in range(k_max + 1):
        for l in range(l_max + 1):
            try:
                super_catalan(k, l)
                report.record(True, "integrality", (k, l))
            except ArithmeticError as exc:
                report.record(False, "integrality", (k, l), str(exc))
    return report


def partition_of_unity_check(m_max: int) -> CheckReport:
    """(cos^2 + sin^2)^m integrates to 1: sum over k+l=m of
    C(m, l) 4^-m M[k][l] = 1."""
    report = CheckReport(f"partition of unity m<={m_max}")
    for m in range(m_max + 1):
        total = sum(comb(m, l) * super_catalan(m - l, l) for l in range(m + 1))
        report.expect_equal(total, 4 ** m, "binomial moment sum", m)
    return report


def suite(order: int) -> list[CheckReport]:
    return [
        lu_factorization_check(order),
        moment_matrix_oracle_check(min(order, 20)),
        symmetry_check(order),
        integral_recurrence_check(min(order, 15), min(order, 15)),
        hypergeometric_sum_range(min(order, 60)),
        integrality_check(min(order, 60), min(order, 60)),
        partition_of_unity_check(min(order, 60)),
    ]
