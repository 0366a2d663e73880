"""Independent brute-force oracles. None of these call into the package."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def falling_factorial_coeffs(m):
    """Coefficients of x(x-1)...(x-m+1), lowest degree first."""
    poly = [1]
    for r in range(m):
        poly = poly_mul(poly, [-r, 1])
    return poly


def cycle_count(perm):
    seen = set()
    count = 0
    for s in range(len(perm)):
        if s in seen:
            continue
        count += 1
        x = s
        while x not in seen:
            seen.add(x)
            x = perm[x]
    return count


def brute_stirling_unsigned(m, i):
    return sum(1 for p in itertools.permutations(range(m)) if cycle_count(p) == i)


def brute_eulerian(d, i):
    return sum(
        1
        for p in itertools.permutations(range(d))
        if sum(p[t] > p[t + 1] for t in range(d - 1)) == i
    )


def brute_lattice(d, k, n):
    box = [range(-n, n + 1)] * k + [range(0, n + 1)] * (d - k)
    return sum(1 for x in itertools.product(*box) if sum(abs(v) for v in x) <= n)


def closed_P(d, k, n):
    return sum(math.comb(k, i) * math.comb(n + d - i, d) for i in range(k + 1))


def fit_polynomial(values):
    """Coefficients of the unique polynomial through (0, v0), (1, v1), ... (Newton form)."""
    n = len(values)
    diffs = [Fraction(v) for v in values]
    newton = []
    for level in range(n):
        newton.append(diffs[0] / math.factorial(level))
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    # expand sum newton[l] * x(x-1)...(x-l+1)
    out = [Fraction(0)] * n
    for level, c in enumerate(newton):
        for power, f in enumerate(falling_factorial_coeffs(level)):
            out[power] += c * f
    return out


def scaled_coeff_fit(d, k):
    vals = [math.factorial(d) * closed_P(d, k, n) for n in range(d + 1)]
    fit = fit_polynomial(vals)
    assert all(c.denominator == 1 for c in fit)
    return tuple(int(c) for c in fit)


def brute_colored_count(d, k, j):
    """|C(d,k,j)| straight from the definition, by walking S_{d+1}."""
    total = 0
    for p in itertools.permutations(range(1, d + 2)):
        cycles = []
        seen = set()
        for s in range(1, d + 2):
            if s in seen:
                continue
            c = []
            x = s
            while x not in seen:
                seen.add(x)
                c.append(x)
                x = p[x - 1]
            cycles.append(c)
        if len(cycles) != j + 1:
            continue
        weight = 1
        for c in cycles:
            if max(c) <= k:
                weight *= 2 if len(c) % 2 else 0
        total += weight
    return total
