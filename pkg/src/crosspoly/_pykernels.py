"""Pure-Python hot loops. Same contract as the compiled ``_ckernels`` module."""

from __future__ import annotations

import itertools

MAX_TALLY_D = 10


def lattice_count(d: int, k: int, n: int) -> int:
    """Visit every lattice point of the dilated pyramid one by one and count it."""
    # iterative DFS over coordinates; budget is what remains of n
    count = 0
    stack = [(0, n)]
    while stack:
        i, budget = stack.pop()
        if i == d:
            count += 1
            continue
        lo = -budget if i < k else 0
        for x in range(lo, budget + 1):
            stack.append((i + 1, budget - abs(x)))
    return count


def colored_tally(d: int, k: int) -> tuple[list[int], list[int], list[int]]:
    """Walk S_{d+1} once and tally colored objects by j = cycles - 1.

    Returns ``(members, positive, negative)``: the size of C(d, k, j), and the
    number of positive and negative objects of the signed superset.
    """
    if d > MAX_TALLY_D:
        raise ValueError(f"colored_tally limited to d <= {MAX_TALLY_D}")
    m = d + 1
    members = [0] * m
    positive = [0] * m
    negative = [0] * m
    for perm in itertools.permutations(range(m)):
        seen = [False] * m
        ncycles = odd_low = even_low = 0
        for start in range(m):
            if seen[start]:
                continue
            ncycles += 1
            length = 0
            top = 0
            x = start
            while not seen[x]:
                seen[x] = True
                length += 1
                if x > top:
                    top = x
                x = perm[x]
            if top < k:
                if length % 2:
                    odd_low += 1
                else:
                    even_low += 1
        j = ncycles - 1
        base = 1 << odd_low
        if even_low == 0:
            members[j] += base
            positive[j] += base
        else:
            half = base << (even_low - 1)
            positive[j] += half
            negative[j] += half
    return members, positive, negative
