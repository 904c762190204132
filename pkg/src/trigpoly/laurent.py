"""Laurent polynomials in z, the exact stand-in for e^{i*theta}.

A Laurent polynomial is a finitely supported map exponent -> coefficient
with no stored zeros.  Under z = e^{i*theta} every trigonometric identity
in this package becomes an equality of Laurent polynomials, and the
normalized integral over a period becomes the z^0 coefficient.  That makes
this module the independent oracle the other modules are checked against.

Coefficients may be ints, Fractions, or GaussianRationals.
"""

from __future__ import annotations

from fractions import Fraction

from .rings import GaussianRational


class Laurent:
    __slots__ = ("support",)

    def __init__(self, support=None):
        if support is None:
            support = {}
        self.support = {e: c for e, c in support.items() if c}

    @classmethod
    def term(cls, coeff, exponent: int = 0) -> Laurent:
        return cls({exponent: coeff})

    def is_zero(self) -> bool:
        return not self.support

    def coefficient(self, exponent: int):
        return self.support.get(exponent, 0)

    def constant_term(self):
        """Coefficient of z^0, i.e. the normalized period integral."""
        return self.support.get(0, 0)

    def min_exp(self) -> int:
        return min(self.support) if self.support else 0

    def max_exp(self) -> int:
        return max(self.support) if self.support else 0

    def invert_variable(self) -> Laurent:
        """Substitute z -> 1/z."""
        return Laurent({-e: c for e, c in self.support.items()})

    def conjugate_coeffs(self) -> Laurent:
        return Laurent(
            {e: c.conjugate() if isinstance(c, GaussianRational) else c
             for e, c in self.support.items()}
        )

    def is_real(self) -> bool:
        return all(
            not isinstance(c, GaussianRational) or c.is_real()
            for c in self.support.values()
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent):
            return NotImplemented
        keys = set(self.support) | set(other.support)
        return all(self.coefficient(e) == other.coefficient(e) for e in keys)

    def __neg__(self) -> Laurent:
        return Laurent({e: -c for e, c in self.support.items()})

    def __add__(self, other):
        if not isinstance(other, Laurent):
            other = Laurent.term(other)
        out = dict(self.support)
        for e, c in other.support.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Laurent):
            other = Laurent.term(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            return Laurent({e: c * other for e, c in self.support.items()})
        out: dict = {}
        for e1, c1 in self.support.items():
            for e2, c2 in other.support.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Laurent:
        if n < 0:
            raise ValueError("negative Laurent power")
        result = Laurent.term(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        if not self.support:
            return "Laurent(0)"
        bits = []
        for e in sorted(self.support):
            c = self.support[e]
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"({c})z")
            else:
                bits.append(f"({c})z^{e}")
        return "Laurent(" + " + ".join(bits) + ")"


def constant_term(p: Laurent):
    return p.constant_term()


def product_constant_term(a: Laurent, b: Laurent):
    """Constant term of a*b without building the full product."""
    if len(b.support) < len(a.support):
        a, b = b, a
    total = 0
    for e, c in a.support.items():
        other = b.support.get(-e)
        if other is not None:
            total = total + c * other
    return total


def cosine(k: int = 1) -> Laurent:
    """cos(k*theta) as (z^k + z^-k)/2."""
    if k == 0:
        return Laurent.term(Fraction(1))
    return Laurent({k: Fraction(1, 2), -k: Fraction(1, 2)})


def sine(k: int = 1) -> Laurent:
    """sin(k*theta) as (z^k - z^-k)/(2i), over Gaussian rationals."""
    if k == 0:
        return Laurent()
    half_over_i = GaussianRational(0, Fraction(-1, 2))
    return Laurent({k: half_over_i, -k: -half_over_i})
