"""Scaled Ehrhart polynomials of cross-polytope pyramids and h*-machinery.

P(d, k, n) counts lattice points in the n-th dilate of the (d-k)-fold pyramid
over the k-dimensional cross-polytope; its series is (1+x)^k / (1-x)^(d+1).
``coeffs(d, k)`` gives the integer coefficients of d! * P(d, k, n) in n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .numbers import binomial, e_coefficient, eulerian, factorial
from .report import Report
from .series import TruncatedSeries

IntPolynomial = tuple[int, ...]

__all__ = [
    "IntPolynomial",
    "CoefficientVector",
    "P",
    "coeffs",
    "evaluate",
    "trim",
    "gf_series",
    "hstar_to_scaled_coeffs",
    "cube_identity_check",
    "egf_series",
    "egf_check",
]


def _check(d: int, k: int) -> None:
    if d < 1 or not 0 <= k <= d:
        raise ValueError(f"need d >= 1 and 0 <= k <= d, got d={d}, k={k}")


@dataclass(frozen=True)
class CoefficientVector:
    """c(0), ..., c(d) with d! * P(d, k, n) = sum_j c(j) n^j."""

    c: tuple[int, ...]
    d: int
    k: int

    def __getitem__(self, j: int) -> int:
        return self.c[j]

    def __iter__(self) -> Iterator[int]:
        return iter(self.c)

    def __len__(self) -> int:
        return len(self.c)

    def __call__(self, n: int) -> int:
        return evaluate(self.c, n)


def trim(poly: Sequence[int]) -> IntPolynomial:
    out = list(poly)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def evaluate(poly: Sequence[int], n: int) -> int:
    total = 0
    for c in reversed(poly):
        total = total * n + c
    return total


def P(d: int, k: int, n: int) -> int:
    """Closed form sum_i C(k, i) C(n + d - i, d)."""
    _check(d, k)
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return sum(binomial(k, i) * binomial(n + d - i, d) for i in range(k + 1))


def coeffs(d: int, k: int) -> CoefficientVector:
    """Stirling-number expansion of the scaled Ehrhart coefficients."""
    _check(d, k)
    c = tuple(
        sum(binomial(k, i) * e_coefficient(d, i, j) for i in range(k + 1))
        for j in range(d + 1)
    )
    return CoefficientVector(c, d, k)


def gf_series(d: int, k: int, order: int) -> TruncatedSeries:
    """(1+x)^k / (1-x)^(d+1) up to x^order."""
    _check(d, k)
    one_plus_x = TruncatedSeries([1, 1], order)
    return one_plus_x**k * TruncatedSeries.geometric(order) ** (d + 1)


def hstar_to_scaled_coeffs(d: int, hstar: Sequence[int]) -> IntPolynomial:
    """d!-scaled Ehrhart coefficients from h*-coefficients: sum_i h*(i) e(d, i, j)."""
    hstar = trim(hstar)
    if len(hstar) > d + 1:
        raise ValueError(f"h*-polynomial of degree {len(hstar) - 1} exceeds d={d}")
    return trim(
        sum(h * e_coefficient(d, i, j) for i, h in enumerate(hstar)) for j in range(d + 1)
    )


def cube_identity_check(d: int) -> Report:
    """d! C(d, j) = sum_i A(d, i) e(d, i, j) for every j (unit cube, Eulerian h*)."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    lhs = [factorial(d) * binomial(d, j) for j in range(d + 1)]
    rhs = [sum(eulerian(d, i) * e_coefficient(d, i, j) for i in range(d)) for j in range(d + 1)]
    return Report("cube", {"d": d}, lhs, rhs, witness_count=d + 1, passed=lhs == rhs)


def egf_series(order: int, j: int) -> TruncatedSeries:
    """[t^j] of (1/(1-x)) * exp(t f(x)), f(x) = sum_i 2 x^(2i+1) / (2i+1)."""
    f = TruncatedSeries(
        [Fraction(2, i) if i % 2 else 0 for i in range(order + 1)], order
    )
    return TruncatedSeries.geometric(order) * f**j / factorial(j)


def egf_check(d_max: int, j_max: int) -> Report:
    """d! [t^j x^d] of the exponential generating function equals c(d, d, j)."""
    if not 1 <= d_max <= 10 or j_max < 0:
        raise ValueError(f"need 1 <= d_max <= 10 and j_max >= 0, got {d_max}, {j_max}")
    lhs, rhs = [], []
    for j in range(j_max + 1):
        series = egf_series(d_max, j)
        for d in range(1, d_max + 1):
            scaled = series[d] * factorial(d)
            lhs.append(scaled.numerator if scaled.denominator == 1 else scaled)
            rhs.append(coeffs(d, d)[j] if j <= d else 0)
    return Report(
        "egf",
        {"d_max": d_max, "j_max": j_max},
        lhs,
        rhs,
        witness_count=len(lhs),
        passed=lhs == rhs,
    )
