"""Executable coefficient identities: endpoints, monotonicity injections and
the two alternating-sum involutions."""

from __future__ import annotations

import itertools

from . import kernels
from .bijection import forward, inverse
from .colored import (
    BLUE,
    RED,
    ColoredPermutation,
    MarkedPermutation,
    NotInDomain,
    enumerate_C,
    enumerate_signed,
    from_marked,
    sign,
    theorem_involution,
    to_marked,
)
from .ehrhart import P, coeffs, gf_series
from .numbers import factorial
from .permutation import to_canonical
from .report import Report
from .words import count_lattice_points, enumerate_ball_dot, enumerate_W

EXHAUSTIVE_D = 6

__all__ = [
    "check_endpoints",
    "inject_d",
    "inject_k",
    "in_inject_k_image",
    "k_difference_count",
    "alt_involution_small_k",
    "alt_involution_k_eq_d",
    "marked_sign",
    "verify_alternating_sums",
    "verify_injections",
    "verify_theorem",
    "verify_words_count",
    "verify_lattice",
]


def _rebuild(p: ColoredPermutation, pairs, d: int, k: int) -> ColoredPermutation:
    cycles = to_canonical([c for c, _ in pairs])
    color_of = {max(c): col for c, col in pairs}
    return ColoredPermutation(cycles, tuple(color_of[c[0]] for c in cycles), d, k)


def check_endpoints(d: int, k: int) -> Report:
    """c(0) = d! and c(d) = 2^k, by formula and, for small d, by enumeration."""
    c = coeffs(d, k)
    lhs = [c[0], c[d]]
    rhs = [factorial(d), 2**k]
    passed = lhs == rhs
    witnesses = None
    if d <= EXHAUSTIVE_D:
        counted = [sum(1 for _ in enumerate_C(d, k, 0)), sum(1 for _ in enumerate_C(d, k, d))]
        witnesses = sum(counted)
        passed = passed and counted == rhs
    return Report("endpoints", {"d": d, "k": k}, lhs, rhs, witnesses, passed)


def inject_d(p: ColoredPermutation) -> ColoredPermutation:
    """Insert d+2 right before d+1 in its cycle (C(d,k,j) into C(d+1,k,j))."""
    top = p.d + 1
    pairs = []
    for cyc, col in zip(p.cycles, p.colors):
        if top in cyc:
            i = cyc.index(top)
            cyc = cyc[:i] + (top + 1,) + cyc[i:]
        pairs.append((cyc, col))
    return _rebuild(p, pairs, p.d + 1, p.k)


def inject_k(p: ColoredPermutation) -> ColoredPermutation:
    """C(d,k,j) into C(d,k+1,j); the color of k+1's cycle records which case applied."""
    d, k = p.d, p.k
    if k >= d:
        raise ValueError(f"inject_k needs k <= d-1, got k={k}, d={d}")
    target = k + 1
    idx = next(i for i, c in enumerate(p.cycles) if target in c)
    cyc = p.cycles[idx]
    pairs = list(zip(p.cycles, p.colors))
    if max(cyc) > target:
        pass
    elif len(cyc) % 2:
        pairs[idx] = (cyc, BLUE)
    else:
        moved = cyc[-1]
        pairs[idx] = (cyc[:-1], RED)
        last_cycle, last_color = pairs[-1]
        pairs[-1] = (last_cycle + (moved,), last_color)
    return _rebuild(p, pairs, d, k + 1)


def _pred_of_top(p: ColoredPermutation) -> int:
    # cyclic predecessor of d+1, i.e. the last entry of its canonical cycle
    return p.cycles[-1][-1]


def in_inject_k_image(q: ColoredPermutation) -> bool:
    """Characterisation of the image of inject_k inside C(d, k+1) (q.k = k+1)."""
    target = q.k
    idx = next(i for i, c in enumerate(q.cycles) if target in c)
    cyc, col = q.cycles[idx], q.colors[idx]
    return max(cyc) > target or col == BLUE or (col == RED and _pred_of_top(q) < target)


def k_difference_count(d: int, k: int, j: int) -> int:
    """Elements of C(d,k+1,j) with k+1 red and the entry before d+1 larger than k+1."""
    if k >= d:
        raise ValueError(f"need k <= d-1, got k={k}, d={d}")
    target = k + 1
    total = 0
    for q in enumerate_C(d, target, j):
        col = next(c for cyc, c in zip(q.cycles, q.colors) if target in cyc)
        if col == RED and _pred_of_top(q) > target:
            total += 1
    return total


def alt_involution_small_k(p: ColoredPermutation) -> ColoredPermutation:
    """Split the (d+1)-cycle before d, or append d's cycle to the (d+1)-cycle."""
    d = p.d
    if p.k >= d:
        raise NotInDomain("alt_involution_small_k needs k < d")
    pairs = list(zip(p.cycles, p.colors))
    top_cycle, top_color = pairs.pop()
    if d in top_cycle:
        i = top_cycle.index(d)
        pairs.append((top_cycle[:i], top_color))
        pairs.append((top_cycle[i:], None))
    else:
        idx = next(i for i, (c, _) in enumerate(pairs) if c[0] == d)
        d_cycle, _ = pairs.pop(idx)
        pairs.append((top_cycle + d_cycle, top_color))
    return _rebuild(p, pairs, d, p.k)


def marked_sign(m: MarkedPermutation) -> int:
    """+1 iff the cycle of d+1 has odd length."""
    return 1 if len(m.cycles[-1]) % 2 else -1


def alt_involution_k_eq_d(m: MarkedPermutation) -> MarkedPermutation:
    """Peel the last entry off the (d+1)-cycle as a red singleton, or merge it back."""
    top = m.cycles[-1]
    if m.mark is not None:
        rest = [c for c in m.cycles[:-1] if c != (m.mark,)]
        return MarkedPermutation(to_canonical(rest + [top + (m.mark,)]), None, m.d, m.k)
    if len(top) == 1:
        raise NotInDomain(f"{m} is a fixed point: d+1 is fixed and nothing is marked")
    moved = top[-1]
    cycles = to_canonical(list(m.cycles[:-1]) + [top[:-1], (moved,)])
    return MarkedPermutation(cycles, moved, m.d, m.k)


def _check_small_k_involution(d: int, k: int) -> tuple[bool, int, list[str]]:
    problems: list[str] = []
    pairs = 0
    for j in range(d + 1):
        for p in enumerate_C(d, k, j):
            q = alt_involution_small_k(p)
            if alt_involution_small_k(q) != p:
                problems.append(f"not involutive at {p}")
            if abs(q.j - p.j) != 1:
                problems.append(f"cycle count did not change by one at {p}")
            if not q.is_member():
                problems.append(f"image {q} left C({d},{k})")
            pairs += 1
    return not problems, pairs, problems


def _check_k_eq_d_involution(d: int) -> tuple[bool, int, list[str]]:
    problems: list[str] = []
    fixed = 0
    for j in range(d + 1):
        for p in enumerate_C(d, d, j):
            m = to_marked(p)
            if marked_sign(m) != (-1) ** (d - j):
                problems.append(f"sign of {m} disagrees with (-1)^(d-j)")
            try:
                image = alt_involution_k_eq_d(m)
            except NotInDomain:
                fixed += 1
                if marked_sign(m) != 1:
                    problems.append(f"negative fixed point {m}")
                continue
            if alt_involution_k_eq_d(image) != m:
                problems.append(f"not involutive at {m}")
            if marked_sign(image) == marked_sign(m):
                problems.append(f"sign not reversed at {m}")
            if to_marked(from_marked(image)) != image:
                problems.append(f"image {image} outside the marked set")
    if fixed != factorial(d):
        problems.append(f"{fixed} fixed points, expected {factorial(d)}")
    return not problems, fixed, problems


def verify_alternating_sums(d: int, k: int) -> Report:
    """sum (-1)^j c(j) = 0 for k < d; sum (-1)^(d-j) c(j) = d! for k = d."""
    c = coeffs(d, k)
    if k < d:
        lhs = sum((-1) ** j * c[j] for j in range(d + 1))
        rhs = 0
    else:
        lhs = sum((-1) ** (d - j) * c[j] for j in range(d + 1))
        rhs = factorial(d)
    passed = lhs == rhs
    witnesses = None
    details: list[str] = []
    if d <= EXHAUSTIVE_D:
        if k < d:
            ok, witnesses, details = _check_small_k_involution(d, k)
        else:
            ok, witnesses, details = _check_k_eq_d_involution(d)
        passed = passed and ok
    return Report("alt-sums", {"d": d, "k": k}, lhs, rhs, witnesses, passed, details[:20])


def verify_injections(d: int, k: int) -> Report:
    """inject_d and inject_k are injective; inject_k's image matches its characterisation
    and its complement has the size of the coefficient gap."""
    problems: list[str] = []
    witnesses = 0
    lhs, rhs = [], []
    for j in range(d + 1):
        source = list(enumerate_C(d, k, j))
        images_d = {inject_d(p) for p in source}
        if len(images_d) != len(source):
            problems.append(f"inject_d not injective at j={j}")
        if any(not q.is_member() or q.j != j for q in images_d):
            problems.append(f"inject_d left C({d + 1},{k},{j})")
        witnesses += len(source)
        if k < d:
            images_k = {inject_k(p) for p in source}
            if len(images_k) != len(source):
                problems.append(f"inject_k not injective at j={j}")
            target = set(enumerate_C(d, k + 1, j))
            if not images_k <= target:
                problems.append(f"inject_k left C({d},{k + 1},{j})")
            if {q for q in target if in_inject_k_image(q)} != images_k:
                problems.append(f"inject_k image does not match its characterisation at j={j}")
            gap = k_difference_count(d, k, j)
            lhs.append(gap)
            rhs.append(coeffs(d, k + 1)[j] - coeffs(d, k)[j])
            if gap != len(target) - len(images_k):
                problems.append(f"difference count disagrees with image complement at j={j}")
    passed = not problems and lhs == rhs
    return Report("remark45", {"d": d, "k": k}, lhs, rhs, witnesses, passed, problems[:20])


def verify_theorem(d: int, k: int) -> Report:
    """c(d,k,j) = |C(d,k,j)|, with the signed superset cancelling down to C(d,k,j)."""
    if d > EXHAUSTIVE_D:
        raise ValueError(f"exhaustive check limited to d <= {EXHAUSTIVE_D}")
    c = coeffs(d, k)
    problems: list[str] = []
    counts = []
    witnesses = 0
    members_fast, pos_fast, neg_fast = kernels.colored_tally(d, k)
    for j in range(d + 1):
        members = set(enumerate_C(d, k, j))
        counts.append(len(members))
        signed_total = 0
        fixed = set()
        for p in enumerate_signed(d, k, j):
            witnesses += 1
            s = sign(p)
            signed_total += s
            try:
                q = theorem_involution(p)
            except NotInDomain:
                fixed.add(p)
                continue
            if sign(q) != -s or theorem_involution(q) != p:
                problems.append(f"involution fails at {p}")
        if signed_total != len(members):
            problems.append(f"signed sum {signed_total} != |C| = {len(members)} at j={j}")
        if fixed != members:
            problems.append(f"fixed points differ from C({d},{k},{j})")
        if members_fast[j] != len(members) or pos_fast[j] - neg_fast[j] != len(members):
            problems.append(f"kernel tally disagrees at j={j}")
    passed = not problems and list(c) == counts
    return Report("theorem", {"d": d, "k": k}, list(c), counts, witnesses, passed, problems[:20])


def verify_words_count(d: int, k: int, n: int) -> Report:
    """|W(d,k,n)| = d! P(d,k,n) = sum_j |C(d,k,j)| n^j, the last via the bijection."""
    problems: list[str] = []
    words = 0
    for w in enumerate_W(d, k, n):
        words += 1
        p, labels = inverse(w)
        if forward(p, labels, n) != w:
            problems.append(f"forward(inverse(w)) != w for {w}")
    pairs = 0
    if d <= EXHAUSTIVE_D:
        for j in range(d + 1):
            for p in enumerate_C(d, k, j):
                for labels in itertools.product(range(1, n + 1), repeat=j):
                    pairs += 1
                    if inverse(forward(p, labels, n)) != (p, labels):
                        problems.append(f"inverse(forward) fails at {p} {labels}")
        if pairs != words:
            problems.append(f"{pairs} labelled permutations vs {words} words")
    rhs = factorial(d) * P(d, k, n)
    passed = not problems and words == rhs
    return Report("words-count", {"d": d, "k": k, "n": n}, words, rhs, pairs, passed, problems[:20])


def verify_lattice(d: int, k: int, n: int) -> Report:
    """Brute-force lattice count = closed form = series coefficient = ball/dot count."""
    brute = count_lattice_points(d, k, n)
    closed = P(d, k, n)
    series = gf_series(d, k, n)[n]
    balls = sum(1 for _ in enumerate_ball_dot(d, k, n))
    passed = brute == closed == series == balls
    return Report(
        "lattice", {"d": d, "k": k, "n": n}, brute, [closed, int(series), balls], brute, passed
    )
