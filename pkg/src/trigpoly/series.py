"""Truncated formal power series with exact rational coefficients.

A TruncSeries carries an explicit inclusive truncation order; arithmetic
never pretends to know coefficients beyond it, and mixing two orders
truncates to the smaller one.  All coefficients are Fractions.
"""

from __future__ import annotations

from fractions import Fraction


class ConstantTermZero(ZeroDivisionError):
    """Multiplicative inverse of a series with zero constant term."""


class InnerConstantNonzero(ValueError):
    """Composition g(f) requires f(0) = 0."""


class TruncSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("empty series needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls((1,), order)

    @classmethod
    def x(cls, order: int) -> TruncSeries:
        return cls((0, 1), order)

    @classmethod
    def from_function(cls, fn, order: int) -> TruncSeries:
        return cls([fn(n) for n in range(order + 1)], order)

    def coefficient(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self.coeffs], self.order)

    def _align(self, other) -> tuple[TruncSeries, TruncSeries]:
        if not isinstance(other, TruncSeries):
            other = TruncSeries([other], self.order)
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __add__(self, other) -> TruncSeries:
        a, b = self._align(other)
        return TruncSeries([x + y for x, y in zip(a.coeffs, b.coeffs)], a.order)

    __radd__ = __add__

    def __sub__(self, other) -> TruncSeries:
        a, b = self._align(other)
        return TruncSeries([x - y for x, y in zip(a.coeffs, b.coeffs)], a.order)

    def __rsub__(self, other) -> TruncSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        a, b = self._align(other)
        n = a.order
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b.coeffs[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse, requires nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ConstantTermZero("series constant term is zero")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / self.coeffs[0]
        for k in range(1, n + 1):
            s = sum(self.coeffs[j] * out[k - j] for j in range(1, k + 1))
            out[k] = -s / self.coeffs[0]
        return TruncSeries(out, n)

    def compose(self, inner: TruncSeries) -> TruncSeries:
        """g.compose(f) = g(f(x)); f must have zero constant term."""
        if inner.coefficient(0) != 0:
            raise InnerConstantNonzero("inner series must vanish at 0")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = TruncSeries.zero(n)
        for c in reversed(self.coeffs[: n + 1]):
            acc = acc * inner + TruncSeries([c], n)
        return acc

    def pow(self, k: int) -> TruncSeries:
        if k < 0:
            return self.inverse().pow(-k)
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> TruncSeries:
        """Multiply by x**k (k >= 0) or divide by x**-k, keeping the order.

        Shifting up drops the top coefficients past the order; shifting
        down requires the dropped low coefficients to be zero.
        """
        if k >= 0:
            coeffs = (Fraction(0),) * k + self.coeffs
            return TruncSeries(coeffs[: self.order + 1], self.order)
        if any(self.coeffs[:-k]):
            raise ValueError("cannot divide by x: nonzero low coefficients")
        return TruncSeries(self.coeffs[-k:], self.order + k)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 7 else ""
        return f"TruncSeries([{shown}{more}], order={self.order})"


def rational_series(num, den, order: int) -> TruncSeries:
    """Expand num/den as a series, for polynomial num and den, den(0) != 0."""
    n = TruncSeries(list(num), order) if not isinstance(num, TruncSeries) else num
    d = TruncSeries(list(den), order) if not isinstance(den, TruncSeries) else den
    return n * d.inverse()
