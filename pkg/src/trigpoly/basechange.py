"""Base changes between trigonometric polynomial bases.

Everything is phrased for kappa = 2*cos(theta) and sigma = 2*sin(theta),
whose transition matrices are integral.  The bases handled here:

  1, kappa(theta), kappa(2 theta), ...      (cosine multiples)
  1, nu_1, nu_2, ...                        (nu_m = sin((m+1)theta)/sin(theta))
  kappa^0, kappa^1, kappa^2, ...            (cosine powers)
  sigma(theta), sigma(2 theta), ...         (sine multiples)

Each basis element has a canonical Laurent representative under
z = e^{i theta} (kappa(k theta) = z^k + z^-k, nu_m = z^m + z^{m-2} + ...),
which serves as the independent oracle for every matrix built here.
"""

from __future__ import annotations

from fractions import Fraction

from .chebyshev import t_family, u_family
from .checks import CheckReport
from .combinatorics import (
    binomial,
    catalan_triangle_even,
    catalan_triangle_odd,
    even_triangle,
    odd_triangle,
    pyramidal,
)
from .laurent import Laurent
from .poly import Poly
from .rings import GaussianRational


# ---------------------------------------------------------------------------
# Laurent representatives of the basis elements


def one_element() -> Laurent:
    return Laurent.term(1)


def kappa_multiple(k: int) -> Laurent:
    """kappa(k*theta) = z^k + z^-k for k >= 1; the constant 1 for k = 0."""
    if k == 0:
        return Laurent.term(1)
    return Laurent({k: 1, -k: 1})


def kappa_power(j: int) -> Laurent:
    return kappa_multiple(1) ** j


def nu_element(m: int) -> Laurent:
    """nu_m = sin((m+1)theta)/sin(theta) = z^m + z^(m-2) + ... + z^-m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return Laurent({m - 2 * j: 1 for j in range(m + 1)})


def sigma_multiple(k: int) -> Laurent:
    """sigma(k*theta) = 2*sin(k*theta) = -i (z^k - z^-k), over Q(i)."""
    if k == 0:
        return Laurent()
    minus_i = GaussianRational(0, -1)
    return Laurent({k: minus_i, -k: -minus_i})


def sigma_power(j: int) -> Laurent:
    return sigma_multiple(1) ** j


def sigma_squared() -> Laurent:
    """sigma^2 = -(z - z^-1)^2, already rational."""
    return Laurent({2: -1, 0: 2, -2: -1})


_BASIS_FAMILIES = {
    "kappa-multiple": kappa_multiple,
    "kappa-power": kappa_power,
    "nu": nu_element,
    "sigma-multiple": sigma_multiple,
    "sigma-power": sigma_power,
}


def laurent_expand(family: str, index: int) -> Laurent:
    """Canonical Laurent representative of a named basis element."""
    try:
        builder = _BASIS_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown basis family {family!r}") from None
    return builder(index)


# ---------------------------------------------------------------------------
# Power reduction


def power_reduce(kind: str, n: int) -> list[Fraction]:
    """Multiple-angle coefficients of a power of cos or sin.

    cos-even:  2^(2n-1) cos^(2n)  = c[0] + sum_k c[k] cos(2k theta)
    cos-odd:   2^(2n)  cos^(2n+1) = sum_k c[k] cos((2k+1) theta)
    sin-even:  2^(2n-1) sin^(2n)  = c[0] + sum_k c[k] cos(2k theta)
    sin-odd:   2^(2n)  sin^(2n+1) = sum_k c[k] sin((2k+1) theta)

    The lone half-integer is the even center term binomial(2n, n)/2; all
    other entries are integers.  Internally the even identities are scaled
    by 2 so the checks stay integral.
    """
    if kind in ("cos-even", "sin-even"):
        if n < 1:
            raise ValueError("even kinds need n >= 1")
        sign = 1 if kind == "cos-even" else -1
        out = [Fraction(binomial(2 * n, n), 2)]
        out += [Fraction(sign ** k * binomial(2 * n, n - k)) for k in range(1, n + 1)]
        return out
    if kind in ("cos-odd", "sin-odd"):
        if n < 0:
            raise ValueError("n must be >= 0")
        sign = 1 if kind == "cos-odd" else -1
        return [Fraction(sign ** k * binomial(2 * n + 1, n - k)) for k in range(n + 1)]
    raise ValueError(f"unknown kind {kind!r}")


def power_reduce_oracle_check(n_max: int) -> CheckReport:
    """Rebuild each reduction from its coefficients and compare against the
    direct Laurent expansion of the power, monomial by monomial."""
    report = CheckReport(f"power reduction vs Laurent n<={n_max}")
    kappa = kappa_multiple(1)
    ssq = sigma_squared()
    sig = sigma_multiple(1)
    for n in range(1, n_max + 1):
        # doubled even identities: 2^(2n) cos^(2n) = kappa^(2n)
        coeffs = power_reduce("cos-even", n)
        rebuilt = Laurent.term(2 * coeffs[0])
        for k in range(1, n + 1):
            rebuilt = rebuilt + kappa_multiple(2 * k) * coeffs[k]
        report.record(rebuilt == kappa ** (2 * n), "cos even reduction", n)

        coeffs = power_reduce("sin-even", n)
        rebuilt = Laurent.term(2 * coeffs[0])
        for k in range(1, n + 1):
            rebuilt = rebuilt + kappa_multiple(2 * k) * coeffs[k]
        report.record(rebuilt == ssq ** n, "sin even reduction", n)

        # odd identities: 2^(2n+1) cos^(2n+1) = kappa^(2n+1)
        m = n - 1
        coeffs = power_reduce("cos-odd", m)
        rebuilt = Laurent()
        for k in range(m + 1):
            rebuilt = rebuilt + kappa_multiple(2 * k + 1) * coeffs[k]
        report.record(rebuilt == kappa ** (2 * m + 1), "cos odd reduction", m)

        coeffs = power_reduce("sin-odd", m)
        rebuilt = Laurent()
        for k in range(m + 1):
            rebuilt = rebuilt + sigma_multiple(2 * k + 1) * coeffs[k]
        want = sig ** (2 * m + 1)
        report.record(rebuilt == want, "sin odd reduction", m)
        report.record((sig ** (2 * m + 2)).is_real(),
                      "even sine powers are real", m)
    return report


def cos_power_to_nu(parity: str, n: int) -> list[int]:
    """Catalan-triangle expansions of cosine powers over the nu basis.

    even: 2^(2n) cos^(2n)      = sum_k Bodd[n][k] * nu_(2k),   k = 0..n
    odd:  2^(2n-1) cos^(2n-1)  = sum_k Beven[n][k] * nu_(2k-1), k = 1..n
    """
    if parity == "even":
        if n < 0:
            raise ValueError("n must be >= 0")
        return [catalan_triangle_odd(n, k) for k in range(n + 1)]
    if parity == "odd":
        if n < 1:
            raise ValueError("odd parity needs n >= 1")
        return [catalan_triangle_even(n, k) for k in range(1, n + 1)]
    raise ValueError(f"unknown parity {parity!r}")


def cos_power_to_nu_oracle_check(n_max: int) -> CheckReport:
    report = CheckReport(f"cos powers over nu vs Laurent n<={n_max}")
    kappa = kappa_multiple(1)
    for n in range(1, n_max + 1):
        coeffs = cos_power_to_nu("even", n)
        rebuilt = Laurent()
        for k, c in enumerate(coeffs):
            rebuilt = rebuilt + nu_element(2 * k) * c
        report.record(rebuilt == kappa ** (2 * n), "even power over nu", n)

        coeffs = cos_power_to_nu("odd", n)
        rebuilt = Laurent()
        for k, c in enumerate(coeffs, start=1):
            rebuilt = rebuilt + nu_element(2 * k - 1) * c
        report.record(rebuilt == kappa ** (2 * n - 1), "odd power over nu", n)
    return report


# ---------------------------------------------------------------------------
# The eight transition matrices

TRANSITION_NAMES = (
    "even-angles-in-powers",   # kappa(2k theta) expanded over kappa^(2i)
    "even-powers-in-angles",   # kappa^(2j) expanded over cosine multiples
    "odd-angles-in-powers",
    "odd-powers-in-angles",
    "even-powers-in-nu",       # kappa^(2j) expanded over nu_(2i)
    "even-nu-in-powers",
    "odd-powers-in-nu",
    "odd-nu-in-powers",
)

MUTUAL_INVERSE_PAIRS = (
    ("even-angles-in-powers", "even-powers-in-angles"),
    ("odd-angles-in-powers", "odd-powers-in-angles"),
    ("even-powers-in-nu", "even-nu-in-powers"),
    ("odd-powers-in-nu", "odd-nu-in-powers"),
)


def _entry(name: str, i: int, j: int) -> int:
    if j < i:
        return 0
    if name == "even-angles-in-powers":
        return (-1) ** (j - i) * pyramidal(2 * i, j - i)
    if name == "even-powers-in-angles":
        return binomial(2 * j, j - i)
    if name == "odd-angles-in-powers":
        return (-1) ** (j - i) * pyramidal(2 * i + 1, j - i)
    if name == "odd-powers-in-angles":
        return binomial(2 * j + 1, j - i)
    if name == "even-powers-in-nu":
        return catalan_triangle_odd(j, i)
    if name == "even-nu-in-powers":
        return (-1) ** (j - i) * binomial(i + j, j - i)
    if name == "odd-powers-in-nu":
        return catalan_triangle_even(j + 1, i + 1)
    if name == "odd-nu-in-powers":
        return (-1) ** (j - i) * binomial(i + j + 1, j - i)
    raise ValueError(f"unknown transition matrix {name!r}")


def transition_matrix(name: str, size: int) -> list[list[int]]:
    """Upper-triangular size x size change-of-basis matrix, generated from
    its closed formula (pyramidal, binomial, or Catalan-triangle entries)."""
    if size < 1:
        raise ValueError("size must be >= 1")
    return [[_entry(name, i, j) for j in range(size)] for i in range(size)]


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def _is_identity(m: list[list[int]]) -> tuple[bool, str]:
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            if v != (1 if i == j else 0):
                return False, f"entry ({i}, {j}) = {v}"
    return True, ""


def verify_mutual_inverse(pair: tuple[str, str], size: int) -> CheckReport:
    """Exact product of a mutually inverse matrix pair equals the identity;
    for the nu pairs, also check that the Catalan-side matrices are the
    transposed Catalan triangles."""
    report = CheckReport(f"mutual inverse {pair[0]} / {pair[1]} size {size}")
    a = transition_matrix(pair[0], size)
    b = transition_matrix(pair[1], size)
    ok, where = _is_identity(_matmul(a, b))
    report.record(ok, "product is identity", where or size)
    ok, where = _is_identity(_matmul(b, a))
    report.record(ok, "reverse product is identity", where or size)

    if pair[0] == "even-powers-in-nu":
        transpose = [[a[j][i] for j in range(size)] for i in range(size)]
        report.expect_equal(transpose, odd_triangle(size),
                            "transpose equals odd Catalan triangle", size)
    if pair[0] == "odd-powers-in-nu":
        transpose = [[a[j][i] for j in range(size)] for i in range(size)]
        report.expect_equal(transpose, even_triangle(size),
                            "transpose equals even Catalan triangle", size)
    return report


def transition_oracle_check(size: int) -> CheckReport:
    """Column-by-column Laurent verification: each matrix really expresses
    its target basis over its source basis."""
    report = CheckReport(f"transition matrices vs Laurent size {size}")
    cases = {
        "even-angles-in-powers":
            (lambda i: kappa_power(2 * i), lambda j: kappa_multiple(2 * j)),
        "even-powers-in-angles":
            (lambda i: kappa_multiple(2 * i), lambda j: kappa_power(2 * j)),
        "odd-angles-in-powers":
            (lambda i: kappa_power(2 * i + 1), lambda j: kappa_multiple(2 * j + 1)),
        "odd-powers-in-angles":
            (lambda i: kappa_multiple(2 * i + 1), lambda j: kappa_power(2 * j + 1)),
        "even-powers-in-nu":
            (lambda i: nu_element(2 * i), lambda j: kappa_power(2 * j)),
        "even-nu-in-powers":
            (lambda i: kappa_power(2 * i), lambda j: nu_element(2 * j)),
        "odd-powers-in-nu":
            (lambda i: nu_element(2 * i + 1), lambda j: kappa_power(2 * j + 1)),
        "odd-nu-in-powers":
            (lambda i: kappa_power(2 * i + 1), lambda j: nu_element(2 * j + 1)),
    }
    for name, (source, target) in cases.items():
        m = transition_matrix(name, size)
        for j in range(size):
            rebuilt = Laurent()
            for i in range(j + 1):
                if m[i][j]:
                    rebuilt = rebuilt + source(i) * m[i][j]
            report.record(rebuilt == target(j), name, f"column {j}")
    return report


def orthogonality_check(n_max: int) -> CheckReport:
    """Constant-term inner products: ct(kappa(m) * kappa(n)) = 2 delta_mn
    for m, n >= 1, and ct(kappa(m)) = 0 for m >= 1, ct(1 * 1) = 1."""
    report = CheckReport(f"orthogonality n<={n_max}")
    report.expect_equal(one_element().constant_term(), 1, "ct(1*1)", 0)
    for m in range(1, n_max + 1):
        report.expect_equal(kappa_multiple(m).constant_term(), 0,
                            "ct(kappa(m))", m)
        for n in range(1, n_max + 1):
            got = (kappa_multiple(m) * kappa_multiple(n)).constant_term()
            report.expect_equal(got, 2 if m == n else 0,
                                "ct(kappa(m) kappa(n))", (m, n))
    return report


def roundtrip_check(n_max: int) -> CheckReport:
    """Expand kappa^(2n) in cosine multiples and map back; the round trip
    must return the unit coefficient vector."""
    report = CheckReport(f"base change round trip n<={n_max}")
    size = n_max + 1
    fwd = transition_matrix("even-powers-in-angles", size)
    back = transition_matrix("even-angles-in-powers", size)
    for n in range(size):
        col = [fwd[i][n] for i in range(size)]
        returned = [sum(back[i][k] * col[k] for k in range(size))
                    for i in range(size)]
        want = [1 if i == n else 0 for i in range(size)]
        report.expect_equal(returned, want, "round trip", n)
    return report


def linear_independence_check(n_max: int) -> CheckReport:
    """Distinct multiple-angle elements have distinct leading exponents."""
    report = CheckReport(f"leading exponents n<={n_max}")
    for k in range(n_max + 1):
        report.expect_equal(kappa_multiple(k).max_exp(), k,
                            "kappa multiple leading exponent", k)
        report.expect_equal(nu_element(k).max_exp(), k,
                            "nu leading exponent", k)
    return report


# ---------------------------------------------------------------------------
# Closed-form cosine series


def cosine_series_check(order: int) -> CheckReport:
    """The four closed-form series over Q[c][[x]], c standing for
    cos(theta), with D(x) = (1+x)^2 - 4c^2 x:

      (1 - x^2)/D   = 1 + 2 sum_{n>=1} cos(2n theta) x^n
      (1 - x)c/D    = sum cos((2n+1) theta) x^n
      (1 + x)/D     = sum (sin((2n+1) theta)/sin theta) x^n
      2c/D          = sum (sin(2(n+1) theta)/sin theta) x^n

    cos(k theta) and sin((k+1)theta)/sin(theta) are replaced by T_k(c) and
    U_k(c), the series is cross-multiplied by D, and coefficients of x^n
    are compared as integer polynomials in c.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    report = CheckReport(f"cosine series order {order}")
    c = Poly((0, 1))
    one = Poly((1,))
    ts = t_family(2 * order + 2)
    us = u_family(2 * order + 2)
    den = [one, Poly((2, 0, -4)), one]  # (1+x)^2 - 4c^2 x

    def check(tag, terms, rhs):
        got = _poly_series(den, terms, order)
        for n in range(order + 1):
            want = rhs.get(n, Poly())
            report.record(got[n] == want, tag, f"x^{n}",
                          f"got {got[n]}, want {want}")

    check("even cosine multiples",
          [one if n == 0 else 2 * ts[2 * n] for n in range(order + 1)],
          {0: one, 2: -one})
    check("odd cosine multiples",
          [ts[2 * n + 1] for n in range(order + 1)],
          {0: c, 1: -c})
    check("even nu elements",
          [us[2 * n] for n in range(order + 1)],
          {0: one, 1: one})
    check("odd nu elements",
          [us[2 * n + 1] for n in range(order + 1)],
          {0: 2 * c})
    return report


def _poly_series(den: list[Poly], terms: list[Poly], order: int) -> list[Poly]:
    out = [Poly() for _ in range(order + 1)]
    for i, d in enumerate(den):
        if d.is_zero():
            continue
        for n in range(order + 1 - i):
            out[i + n] = out[i + n] + d * terms[n]
    return out


def suite(order: int) -> list[CheckReport]:
    reports = [verify_mutual_inverse(pair, order) for pair in MUTUAL_INVERSE_PAIRS]
    reports += [
        transition_oracle_check(min(order, 20)),
        power_reduce_oracle_check(min(order, 25)),
        cos_power_to_nu_oracle_check(min(order, 25)),
        orthogonality_check(min(order, 30)),
        roundtrip_check(min(order, 25)),
        linear_independence_check(min(order, 30)),
        cosine_series_check(min(order, 20)),
    ]
    return reports
