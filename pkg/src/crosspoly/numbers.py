"""Exact combinatorial number families.

Plain Python ``int`` and :class:`fractions.Fraction` carry all values; nothing
here ever touches floating point. Out-of-range arguments return 0 so that the
double sums elsewhere need no boundary cases.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Fraction",
    "factorial",
    "binomial",
    "stirling_first_signed",
    "stirling_first_unsigned",
    "eulerian",
    "e_coefficient",
]


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError(f"factorial of negative number {m}")
    return math.factorial(m)


def binomial(m: int, r: int) -> int:
    """C(m, r), zero when r lies outside [0, m]."""
    if m < 0:
        raise ValueError(f"binomial top argument must be nonnegative, got {m}")
    if r < 0 or r > m:
        return 0
    return math.comb(m, r)


@lru_cache(maxsize=None)
def _stirling_row(m: int) -> tuple[int, ...]:
    # signed s(m, 0..m) via s(m,i) = s(m-1,i-1) - (m-1) s(m-1,i)
    if m == 0:
        return (1,)
    prev = _stirling_row(m - 1)
    row = [0] * (m + 1)
    for i in range(1, m + 1):
        left = prev[i - 1]
        right = prev[i] if i < m else 0
        row[i] = left - (m - 1) * right
    return tuple(row)


def _grow(m: int) -> tuple[int, ...]:
    # fill the cache bottom-up so deep rows never recurse past the interpreter limit
    for r in range(m + 1):
        row = _stirling_row(r)
    return row


def stirling_first_signed(m: int, i: int) -> int:
    """Signed Stirling number of the first kind, the coefficient of x^i in x(x-1)...(x-m+1)."""
    if m < 0:
        raise ValueError(f"stirling_first_signed needs m >= 0, got {m}")
    if i < 0 or i > m:
        return 0
    return _grow(m)[i]


def stirling_first_unsigned(m: int, i: int) -> int:
    """Number of permutations of [m] with exactly i cycles."""
    return abs(stirling_first_signed(m, i))


@lru_cache(maxsize=None)
def _eulerian_row(d: int) -> tuple[int, ...]:
    if d == 1:
        return (1,)
    prev = _eulerian_row(d - 1)
    row = [0] * d
    for i in range(d):
        stay = prev[i] if i < d - 1 else 0
        grow = prev[i - 1] if i >= 1 else 0
        row[i] = (i + 1) * stay + (d - i) * grow
    return tuple(row)


def eulerian(d: int, i: int) -> int:
    """A(d, i): permutations of [d] with exactly i descents."""
    if d < 1:
        raise ValueError(f"eulerian needs d >= 1, got {d}")
    if i < 0 or i > d - 1:
        return 0
    for r in range(1, d + 1):
        row = _eulerian_row(r)
    return row[i]


def e_coefficient(d: int, i: int, j: int) -> int:
    """Kernel turning h*-coefficients into d!-scaled Ehrhart coefficients.

    e(d, i, j) = sum_l |s(d-i+1, l+1)| * s(i, j-l). These can be negative.
    """
    if d < 1 or not 0 <= i <= d or not 0 <= j <= d:
        raise ValueError(f"e_coefficient needs d >= 1 and 0 <= i, j <= d, got {(d, i, j)}")
    return sum(
        stirling_first_unsigned(d - i + 1, l + 1) * stirling_first_signed(i, j - l)
        for l in range(d - i + 1)
    )
