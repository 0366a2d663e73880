"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class TruncatedSeries:
    """Power series known up to and including x^order."""

    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs: Iterable, order: int, var: str = "x"):
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = [Fraction(v) for v in coeffs][: order + 1]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        self.coeffs = tuple(c)
        self.order = order
        self.var = var

    @classmethod
    def geometric(cls, order: int, var: str = "x") -> "TruncatedSeries":
        """1/(1 - x)."""
        return cls([1] * (order + 1), order, var)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.var != self.var:
                raise ValueError("series in different variables")
            return other
        return TruncatedSeries([other], self.order, self.var)

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"x^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n] if n >= 0 else Fraction(0)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], order, self.var)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order, self.var)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            f = Fraction(other)
            return TruncatedSeries([a * f for a in self.coeffs], self.order, self.var)
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: order + 1 - i]):
                    out[i + j] += a * b
        return TruncatedSeries(out, order, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = TruncatedSeries([1], self.order, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, scalar) -> "TruncatedSeries":
        f = Fraction(scalar)
        return TruncatedSeries([a / f for a in self.coeffs], self.order, self.var)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.coeffs, self.order, self.var) == (other.coeffs, other.order, other.var)

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*{self.var}^{i}" for i, c in enumerate(self.coeffs) if c)
        return f"TruncatedSeries({terms or '0'} + O({self.var}^{self.order + 1}))"

    def integers(self) -> list[int]:
        """Coefficients as ints; fails if any is not integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(c.numerator)
        return out
