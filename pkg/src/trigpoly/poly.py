"""Dense univariate polynomials with exact coefficients.

A polynomial is stored as a tuple of coefficients indexed by degree, with
no trailing zeros; the zero polynomial is the empty tuple.  Coefficients
are ordinarily Python ints, but any exact ring element supporting ``+``,
``-`` and ``*`` works (fractions, Gaussian rationals, golden-ratio
integers), so the same class carries integer and rational polynomials.

>>> p = Poly((1, 0, -2))     # 1 - 2x^2
>>> p * p
Poly('1 - 4x^2 + 4x^4')
>>> p(3)
-17
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class NotDivisible(ArithmeticError):
    """Division left a remainder or a non-integer quotient coefficient."""


class NotASquare(ArithmeticError):
    """The polynomial is not the square of an integer polynomial."""


class NonIntegerCoefficient(ArithmeticError):
    """A rescaling that must produce integers yielded a fraction."""


def _strip(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(coeffs)

    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def leading(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __getitem__(self, m: int):
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __radd__(self, other) -> Poly:
        return self + other

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    def __rmul__(self, other) -> Poly:
        return self * other

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule at any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        """Return self(inner(x)), exactly (Horner over polynomials)."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly((c,))
        return acc

    def shift(self, k: int) -> Poly:
        """Multiply by x**k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero():
            return self
        return Poly((0,) * k + self.coeffs)

    def map_coeffs(self, fn) -> Poly:
        return Poly(tuple(fn(c) for c in self.coeffs))

    def rescale_arg(self, num: int, den: int, scale=1) -> Poly:
        """Return scale * p(num*x/den) with exact rational coefficients."""
        out = []
        for m, c in enumerate(self.coeffs):
            out.append(Fraction(c) * scale * Fraction(num, den) ** m)
        return Poly(out)

    def as_integer(self) -> Poly:
        """Coerce rational coefficients back to ints.

        Raises NonIntegerCoefficient if any denominator is not 1; callers
        use this where integrality is a theorem, so a raise is a bug (or a
        disproof).
        """
        out = []
        for c in self.coeffs:
            f = Fraction(c)
            if f.denominator != 1:
                raise NonIntegerCoefficient(f"coefficient {c}")
            out.append(f.numerator)
        return Poly(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if m == 0 else ("x" if m == 1 else f"x^{m}")
            mag = abs(c) if isinstance(c, (int, Fraction)) else c
            if mono and mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}"
            try:
                negative = c < 0
            except TypeError:
                negative = False
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly('{self}')"


X = Poly((0, 1))
ONE = Poly((1,))
ZERO = Poly()


def exact_div(p: Poly, q: Poly) -> Poly:
    """Exact quotient p/q in Z[x] (or Q[x] for rational inputs).

    Raises NotDivisible when long division leaves a remainder, or when the
    inputs are integral but the quotient is not.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return Poly()
    dp, dq = p.degree(), q.degree()
    if dp < dq:
        raise NotDivisible("degree of dividend below divisor")
    integral = all(
        isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
        for c in p.coeffs + q.coeffs
    )
    rem = [Fraction(c) for c in p.coeffs]
    qc = [Fraction(c) for c in q.coeffs]
    lead = qc[-1]
    quot = [Fraction(0)] * (dp - dq + 1)
    for k in range(dp - dq, -1, -1):
        c = rem[k + dq] / lead
        quot[k] = c
        if c:
            for i, qi in enumerate(qc):
                rem[k + i] -= c * qi
    if any(rem):
        raise NotDivisible("nonzero remainder")
    if integral:
        if any(c.denominator != 1 for c in quot):
            raise NotDivisible("non-integer quotient coefficient")
        return Poly([c.numerator for c in quot])
    return Poly(quot)


def sqrt_exact(p: Poly) -> Poly:
    """Integer-coefficient square root q with q*q == p.

    The root is normalized so its lowest nonzero coefficient is positive;
    in particular q(0) > 0 whenever p(0) > 0.  Raises NotASquare when no
    such q exists.
    """
    if p.is_zero():
        raise ValueError("square root of the zero polynomial")
    v = p.valuation()
    if v % 2:
        raise NotASquare("odd valuation")
    core = p.coeffs[v:]
    d = len(core) - 1
    if d % 2:
        raise NotASquare("odd degree")
    c0 = core[0]
    if not isinstance(c0, int):
        raise NotASquare("integer coefficients required")
    if c0 < 0:
        raise NotASquare("negative lowest coefficient")
    r = isqrt(c0)
    if r * r != c0:
        raise NotASquare("lowest coefficient is not a perfect square")
    h = d // 2
    q = [r] + [0] * h
    for k in range(1, h + 1):
        s = core[k] - sum(q[i] * q[k - i] for i in range(1, k))
        num, rem = divmod(s, 2 * r)
        if rem:
            raise NotASquare(f"coefficient matching failed at degree {k}")
        q[k] = num
    candidate = Poly(q).shift(v // 2)
    if candidate * candidate != p:
        raise NotASquare("upper coefficients do not match")
    return candidate
