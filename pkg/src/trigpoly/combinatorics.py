"""Exact integer sequences and triangles.

Binomials (with the falling-factorial extension to negative upper index),
higher-dimensional pyramidal numbers, Catalan-family numbers, the even and
odd Catalan triangles, and the small arithmetic functions needed by the
factorization battery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


class OutOfTriangle(ValueError):
    """Catalan triangle index outside the triangular region."""


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient.

    For n >= 0 this is the usual comb(n, k); for n < 0 it is the falling
    factorial n(n-1)...(n-k+1)/k!, so binomial(-1, 0) == 1.  k must be
    nonnegative.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


def pyramidal(i: int, j: int) -> int:
    """j-th i-dimensional pyramidal number, the coefficient of t^j in
    (1+t)/(1-t)^(i+1).  Returns 0 for j < 0."""
    if i < 0:
        raise ValueError("dimension must be >= 0")
    if j < 0:
        return 0
    return 2 * binomial(i + j, j) - binomial(i + j - 1, j)


def pyramidal_row(i: int, count: int) -> list[int]:
    return [pyramidal(i, j) for j in range(count)]


def central_binomial(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def catalan_segner(count: int) -> list[int]:
    """First `count` Catalan numbers from the quadratic convolution
    recursion, kept as an independent cross-check of the closed form."""
    out = [1]
    for n in range(1, count):
        out.append(sum(out[k] * out[n - 1 - k] for k in range(n)))
    return out[:count]


def fuss_catalan(m: int, p: int, r: int) -> Fraction:
    """Fuss-Catalan number F_m(p, r) = (r/(mp+r)) * binomial(mp+r, m).

    Integer valued on the tested ranges; returned as an exact Fraction.
    """
    if min(m, p, r) < 0:
        raise ValueError("arguments must be >= 0")
    if m == 0:
        return Fraction(1)
    if m * p + r == 0:
        raise ValueError("degenerate denominator: mp + r = 0 with m > 0")
    return Fraction(r, m * p + r) * binomial(m * p + r, m)


def fuss_catalan_forms(m: int, p: int, r: int) -> tuple[Fraction, ...]:
    """The three closed forms of F_m(p, r); they agree whenever every
    denominator is nonzero (m >= 1)."""
    if m < 1:
        raise ValueError("forms comparison needs m >= 1")
    forms = [Fraction(r, m * p + r) * binomial(m * p + r, m)]
    if m * (p - 1) + r != 0:
        forms.append(Fraction(r, m * (p - 1) + r) * binomial(m * p + r - 1, m))
    forms.append(Fraction(r, m) * binomial(m * p + r - 1, m - 1))
    return tuple(forms)


def catalan_triangle_even(i: int, j: int) -> int:
    """Entry (i, j) of the even Catalan triangle, 1-based: (j/i)*C(2i, i-j).

    Column j holds the coefficients of the 2j-fold convolution power of
    the Catalan generating function, shifted onto the diagonal.
    """
    if i < 1 or j < 1:
        raise ValueError("even triangle is 1-based")
    if j > i:
        raise OutOfTriangle(f"({i}, {j})")
    value = Fraction(j, i) * comb(2 * i, i - j)
    assert value.denominator == 1
    return value.numerator


def catalan_triangle_odd(i: int, j: int) -> int:
    """Entry (i, j) of the odd Catalan triangle, 0-based:
    ((2j+1)/(2i+1))*C(2i+1, i-j)."""
    if i < 0 or j < 0:
        raise ValueError("odd triangle is 0-based")
    if j > i:
        raise OutOfTriangle(f"({i}, {j})")
    value = Fraction(2 * j + 1, 2 * i + 1) * comb(2 * i + 1, i - j)
    assert value.denominator == 1
    return value.numerator


def even_triangle(n: int) -> list[list[int]]:
    """Lower-triangular n x n matrix of even Catalan triangle entries,
    rows and columns indexed from 1."""
    return [
        [catalan_triangle_even(i, j) if j <= i else 0 for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def odd_triangle(n: int) -> list[list[int]]:
    """Lower-triangular n x n matrix of odd Catalan triangle entries,
    rows and columns indexed from 0."""
    return [
        [catalan_triangle_odd(i, j) if j <= i else 0 for j in range(n)]
        for i in range(n)
    ]


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(d: int) -> int:
    if d < 1:
        raise ValueError("d must be >= 1")
    result = d
    for p in _factorize(d):
        result = result // p * (p - 1)
    return result


def moebius(d: int) -> int:
    if d < 1:
        raise ValueError("d must be >= 1")
    factors = _factorize(d)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def a014963(d: int) -> int:
    """q when d is a prime power q^k, else 1 (exp of the von Mangoldt
    function)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    factors = _factorize(d)
    if len(factors) == 1:
        return next(iter(factors))
    return 1


def is_prime(n: int) -> bool:
    return n > 1 and _factorize(n) == {n: 1}


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorial_exact(n: int) -> int:
    return factorial(n)
