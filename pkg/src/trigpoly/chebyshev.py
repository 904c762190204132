"""Chebyshev polynomials and their depowered integer variants.

T_n and U_n come from the classical three-term recursions.  P_n(z) =
2*T_n(z/2) (with P_0 = 1) and V_n(z) = U_n(z/2) are the integer-friendly
rescalings adapted to the 2*cos(theta) basis.  Closed forms express the
coefficients through pyramidal numbers and binomials, and every identity
is checkable against an exact Laurent-polynomial oracle in z = e^{i theta}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .checks import CheckReport
from .combinatorics import binomial, pyramidal
from .laurent import Laurent, cosine, sine
from .poly import Poly
from .rings import GaussianRational


def t_family(n_max: int) -> list[Poly]:
    """[T_0, ..., T_n_max] by the recursion T_n = 2x T_{n-1} - T_{n-2}."""
    out = [Poly((1,)), Poly((0, 1))]
    two_x = Poly((0, 2))
    for _ in range(2, n_max + 1):
        out.append(two_x * out[-1] - out[-2])
    return out[: n_max + 1]


def u_family(n_max: int) -> list[Poly]:
    """[U_0, ..., U_n_max] by the recursion U_n = 2x U_{n-1} - U_{n-2}."""
    out = [Poly((1,)), Poly((0, 2))]
    two_x = Poly((0, 2))
    for _ in range(2, n_max + 1):
        out.append(two_x * out[-1] - out[-2])
    return out[: n_max + 1]


def chebyshev_t(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return t_family(n)[n]


def chebyshev_u(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return u_family(n)[n]


def p_poly(n: int) -> Poly:
    """P_0 = 1 and P_n(z) = 2*T_n(z/2) for n > 0; integer coefficients."""
    if n == 0:
        return Poly((1,))
    return chebyshev_t(n).rescale_arg(1, 2, scale=2).as_integer()


def v_poly(n: int) -> Poly:
    """V_n(z) = U_n(z/2); integer coefficients."""
    return chebyshev_u(n).rescale_arg(1, 2).as_integer()


def p_family(n_max: int) -> list[Poly]:
    return [p_poly(n) for n in range(n_max + 1)]


def v_family(n_max: int) -> list[Poly]:
    return [v_poly(n) for n in range(n_max + 1)]


def t_closed_form(n: int) -> Poly:
    """T_n from the pyramidal-number coefficient formulas."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [0] * (n + 1)
    if n % 2 == 0:
        m = n // 2
        coeffs[0] = (-1) ** m
        for j in range(1, m + 1):
            coeffs[2 * j] = (-1) ** (m + j) * 2 ** (2 * j - 1) * pyramidal(2 * j, m - j)
    else:
        m = (n - 1) // 2
        for j in range(m + 1):
            coeffs[2 * j + 1] = (-1) ** (m + j) * 2 ** (2 * j) * pyramidal(2 * j + 1, m - j)
    return Poly(coeffs)


def u_closed_form(n: int) -> Poly:
    """U_n from the binomial coefficient formulas."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [0] * (n + 1)
    if n % 2 == 0:
        m = n // 2
        for j in range(m + 1):
            coeffs[2 * j] = (-1) ** (m + j) * 2 ** (2 * j) * binomial(m + j, 2 * j)
    else:
        m = (n - 1) // 2
        for j in range(m + 1):
            coeffs[2 * j + 1] = (-1) ** (m + j) * 2 ** (2 * j + 1) * binomial(m + j + 1, 2 * j + 1)
    return Poly(coeffs)


_FAMILY_BUILDERS = {
    "T": t_family,
    "U": u_family,
    "P": p_family,
    "V": v_family,
}


def cheb_matrix(kind: str, size: int) -> list[list[int]]:
    """size x size coefficient matrix: entry (m, n) is the x^m coefficient
    of the n-th polynomial of the family."""
    if kind not in _FAMILY_BUILDERS:
        raise ValueError(f"unknown family {kind!r}")
    if size < 1:
        raise ValueError("size must be >= 1")
    polys = _FAMILY_BUILDERS[kind](size - 1)
    return [[polys[n][m] for n in range(size)] for m in range(size)]


def mnemonic_p_matrix(size: int) -> list[list[int]]:
    """Build the P coefficient matrix from the difference / partial-sum
    pattern.

    Row 1 is the odd numbers, row 0 its difference pattern, and each later
    row is the partial-sum sequence of the one above.  The rows are then
    staggered (row i starts in column i, advancing two columns per entry)
    with signs alternating along each row.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    width = size  # entries per raw row, generous for the stagger
    odd = [2 * j + 1 for j in range(width)]
    rows = [[odd[0]] + [odd[j] - odd[j - 1] for j in range(1, width)], odd]
    for _ in range(2, size):
        prev = rows[-1]
        acc, sums = 0, []
        for v in prev:
            acc += v
            sums.append(acc)
        rows.append(sums)
    matrix = [[0] * size for _ in range(size)]
    for i in range(size):
        for j, value in enumerate(rows[i]):
            col = i + 2 * j
            if col >= size:
                break
            matrix[i][col] = (-1) ** j * value
    return matrix


@lru_cache(maxsize=None)
def _brace_doubled(n: int, k: int) -> int:
    # doubled values 2*{n;k}; doubling keeps the corner {0;0} = 1/2 integral
    if k == 0:
        return 1 if n == 0 else 2 ** n
    if n == 0:
        return 2 * (-1) ** k
    return 2 * _brace_doubled(n - 1, k) - _brace_doubled(n, k - 1)


def brace_doubled(n: int, k: int) -> int:
    """2*{n;k} where {n;k} follows the two-direction recurrence
    {n;k} = 2{n-1;k} - {n;k-1} with {n;0} = 2^(n-1) and
    {0;k} = 1/2 if k = 0 else (-1)^k."""
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    return _brace_doubled(n, k)


def brace(n: int, k: int) -> Fraction:
    """Exact rational value {n;k}; equals the k-th nonzero entry of row n
    of the T coefficient matrix for n >= 1 (and T_{0,2k} for n = 0, k >= 1,
    with the lone half-integer at (0,0))."""
    return Fraction(brace_doubled(n, k), 2)


def _half_z_plus_inv() -> Laurent:
    return Laurent({1: Fraction(1, 2), -1: Fraction(1, 2)})


def _half_diff() -> Laurent:
    return Laurent({1: Fraction(1, 2), -1: Fraction(-1, 2)})


def _sin_rep() -> Laurent:
    half_over_i = GaussianRational(0, Fraction(-1, 2))
    return Laurent({1: half_over_i, -1: -half_over_i})


def _first_mismatch(got: Laurent, want: Laurent) -> str:
    for e in sorted(set(got.support) | set(want.support)):
        if got.coefficient(e) != want.coefficient(e):
            return f"z^{e}: got {got.coefficient(e)}, want {want.coefficient(e)}"
    return ""


def _check_trig_values(report: CheckReport, n: int, t_cos: Laurent,
                       u_cos: Laurent, t_sin: Laurent, u_sin: Laurent) -> None:
    """Compare precomputed values of T_n and U_n at the cos and sin
    representatives against the multiple-angle targets."""
    sign = (-1) ** (n // 2)

    want = cosine(n)
    ok = t_cos == want
    report.record(ok, "T_n(cos) = cos(n*theta)", n,
                  "" if ok else _first_mismatch(t_cos, want))

    # multiply both sides of sin*U_n(cos) = sin((n+1)theta) by i to stay
    # inside rational Laurent polynomials
    got = _half_diff() * u_cos
    want = Laurent({n + 1: Fraction(1, 2), -(n + 1): Fraction(-1, 2)})
    ok = got == want
    report.record(ok, "sin * U_n(cos) = sin((n+1)theta)", n,
                  "" if ok else _first_mismatch(got, want))

    want = (cosine(n) if n % 2 == 0 else sine(n)) * sign
    ok = t_sin == want
    report.record(ok, "T_n(sin) case split", n,
                  "" if ok else _first_mismatch(t_sin, want))

    got = cosine(1) * u_sin
    want = (cosine(n + 1) if n % 2 == 0 else sine(n + 1)) * sign
    ok = got == want
    report.record(ok, "cos * U_n(sin) case split", n,
                  "" if ok else _first_mismatch(got, want))


def verify_trig_values(n: int) -> CheckReport:
    """Exact Laurent verification of the four trig-value identities for a
    single n."""
    report = CheckReport(f"trig values n={n}")
    cos_rep, sin_rep = _half_z_plus_inv(), _sin_rep()
    _check_trig_values(report, n, chebyshev_t(n)(cos_rep),
                       chebyshev_u(n)(cos_rep), chebyshev_t(n)(sin_rep),
                       chebyshev_u(n)(sin_rep))
    return report


def trig_values_suite(n_max: int) -> CheckReport:
    """The same identities for every n <= n_max, with the polynomial values
    at the Laurent representatives built by the three-term recursion."""
    report = CheckReport(f"trig values n<={n_max}")
    cos_rep, sin_rep = _half_z_plus_inv(), _sin_rep()
    one = Laurent.term(Fraction(1))
    t_cos = [one, cos_rep]
    u_cos = [one, cos_rep * 2]
    t_sin = [one, sin_rep]
    u_sin = [one, sin_rep * 2]
    for family, rep in ((t_cos, cos_rep), (u_cos, cos_rep),
                        (t_sin, sin_rep), (u_sin, sin_rep)):
        double = rep * 2
        for _ in range(2, n_max + 1):
            family.append(double * family[-1] - family[-2])
    for n in range(n_max + 1):
        _check_trig_values(report, n, t_cos[n], u_cos[n], t_sin[n], u_sin[n])
    return report


def _poly_series_product(den: list[Poly], polys: list[Poly], order: int) -> list[Poly]:
    """Coefficients of den(t) * sum_n polys[n] t^n up to t^order, where den
    is a short list of polynomial coefficients in t."""
    out = [Poly() for _ in range(order + 1)]
    for i, d in enumerate(den):
        if d.is_zero():
            continue
        for n in range(order + 1 - i):
            out[i + n] = out[i + n] + d * polys[n]
    return out


def generating_function_check(order: int, t_polys=None, u_polys=None,
                              p_polys=None) -> CheckReport:
    """Cross-multiplied generating function identities, as series in t
    whose coefficients are integer polynomials:

        (1 - 2tx + t^2) * sum T_n t^n = 1 - tx
        (1 - 2tx + t^2) * sum U_n t^n = 1
        (1 - zt + t^2)  * sum P_n t^n = 1 - t^2
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    report = CheckReport(f"generating functions to order {order}")
    x = Poly((0, 1))
    one = Poly((1,))
    ts = t_polys if t_polys is not None else t_family(order)
    us = u_polys if u_polys is not None else u_family(order)
    ps = p_polys if p_polys is not None else p_family(order)

    cases = [
        ("T", ts, [one, -2 * x, one], {0: one, 1: -x}),
        ("U", us, [one, -2 * x, one], {0: one}),
        ("P", ps, [one, -x, one], {0: one, 2: -one}),
    ]
    for tag, polys, den, rhs in cases:
        got = _poly_series_product(den, polys, order)
        for n in range(order + 1):
            want = rhs.get(n, Poly())
            report.record(got[n] == want, f"{tag} generating function",
                          f"t^{n}", f"got {got[n]}, want {want}")
    return report


def closed_form_check(n_max: int) -> CheckReport:
    report = CheckReport(f"closed forms n<={n_max}")
    ts = t_family(n_max)
    us = u_family(n_max)
    for n in range(n_max + 1):
        report.expect_equal(t_closed_form(n), ts[n], "T closed form", n)
        report.expect_equal(u_closed_form(n), us[n], "U closed form", n)
    return report


def parity_check(n_max: int) -> CheckReport:
    """T_n(-x) = (-1)^n T_n(x), and likewise for U, P, V."""
    report = CheckReport(f"parity n<={n_max}")
    minus_x = Poly((0, -1))
    for tag, polys in (("T", t_family(n_max)), ("U", u_family(n_max)),
                       ("P", p_family(n_max)), ("V", v_family(n_max))):
        for n, p in enumerate(polys):
            flipped = p.compose(minus_x)
            want = p if n % 2 == 0 else -p
            report.record(flipped == want, f"{tag} parity", n)
    return report


def recursion_identity_check(n_max: int) -> CheckReport:
    """x T_{n-1} + (x^2 - 1) U_{n-2} = T_n and T_n + x U_{n-1} = U_n."""
    report = CheckReport(f"mixed recursions n<={n_max}")
    ts = t_family(n_max)
    us = u_family(n_max)
    x = Poly((0, 1))
    x2m1 = Poly((-1, 0, 1))
    for n in range(1, n_max + 1):
        u2 = us[n - 2] if n >= 2 else Poly()
        report.expect_equal(x * ts[n - 1] + x2m1 * u2, ts[n],
                            "x*T + (x^2-1)*U = T", n)
        report.expect_equal(ts[n] + x * us[n - 1], us[n],
                            "T + x*U = U", n)
    return report


def depowering_check(n_max: int) -> CheckReport:
    """2*T_n(z/2) = P_n for n >= 1 and U_n(z/2) = V_n."""
    report = CheckReport(f"depowering n<={n_max}")
    for n in range(1, n_max + 1):
        report.expect_equal(chebyshev_t(n).rescale_arg(1, 2, scale=2).as_integer(),
                            p_poly(n), "2*T(z/2) = P", n)
        report.expect_equal(v_poly(n), chebyshev_u(n).rescale_arg(1, 2).as_integer(),
                            "U(z/2) = V", n)
    return report


def pyramidal_pattern_check(n_max: int) -> CheckReport:
    """Every entry of the P matrix is a signed pyramidal number:
    P_{m, m+2j} = (-1)^j p_j^{[m]}."""
    report = CheckReport(f"P pyramidal pattern n<={n_max}")
    ps = p_family(n_max)
    for n, p in enumerate(ps):
        for m in range(n + 1):
            got = p[m]
            if (n - m) % 2:
                report.record(got == 0, "P parity zero", (m, n))
                continue
            j = (n - m) // 2
            want = (-1) ** j * pyramidal(m, j)
            report.expect_equal(got, want, "P pyramidal entry", (m, n))
    return report


def mnemonic_check(size: int) -> CheckReport:
    report = CheckReport(f"mnemonic P matrix size {size}")
    got = mnemonic_p_matrix(size)
    want = cheb_matrix("P", size)
    report.expect_equal(got, want, "mnemonic equals recursion", size)
    return report


def brace_check(n_max: int) -> CheckReport:
    """Brace numbers reproduce the rows of the T coefficient matrix:
    {n;k} = T_{n, n+2k} for n >= 1, and {0;k} = (-1)^k = T_{0,2k} for
    k >= 1, with {0;0} = T_{0,0}/2."""
    report = CheckReport(f"brace numbers n<={n_max}")
    size = 2 * n_max + 1
    ts = t_family(size - 1)
    for n in range(n_max + 1):
        for k in range(n_max + 1):
            col = n + 2 * k if n >= 1 else 2 * k
            if col >= size:
                continue
            entry = ts[col][n]
            if n == 0 and k == 0:
                report.expect_equal(brace(0, 0), Fraction(entry, 2),
                                    "brace corner", (0, 0))
            else:
                report.expect_equal(brace(n, k), entry, "brace entry", (n, k))
    return report


def suite(order: int) -> list[CheckReport]:
    """Full verification battery at the given order."""
    return [
        closed_form_check(order),
        trig_values_suite(order),
        generating_function_check(order),
        parity_check(order),
        recursion_identity_check(order),
        depowering_check(order),
        pyramidal_pattern_check(order),
        mnemonic_check(max(order, 1)),
        brace_check(min(order, 20)),
    ]
