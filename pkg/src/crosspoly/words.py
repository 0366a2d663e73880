"""Circled words, their enumeration, and the lattice-point / ball-and-dot models.

A word in W(d, k, n) uses every number 1..d exactly once, each either plain or
circled (circling allowed only for values <= k), together with empty circles,
so that there are exactly n circles in total. Tokens are pairs
``(kind, value)`` with kind 0 = number, 1 = circled number, 2 = empty circle;
tuple order is therefore the enumeration order.

ASCII text form: ``[8] o 5 1 7 [3] 4 o 2 6``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import kernels
from .permutation import MalformedInput

NUM, CIRC, EMPTY = 0, 1, 2
Token = tuple[int, int]
CIRCLE: Token = (EMPTY, 0)

BALL, DOT, DOT_IN_BALL = "o", ".", "@"

MAX_BRUTE_D = 8
MAX_BRUTE_N = 8

__all__ = [
    "Token",
    "CIRCLE",
    "number",
    "circled",
    "CircledWord",
    "SizeError",
    "parse_tokens",
    "format_tokens",
    "validate_word",
    "enumerate_W",
    "count_W",
    "validate_point",
    "point_to_balls",
    "balls_to_point",
    "enumerate_ball_dot",
    "format_balls",
    "parse_balls",
    "count_lattice_points",
]


class SizeError(ValueError):
    """Request exceeds the brute-force size guard."""


def number(v: int) -> Token:
    return (NUM, v)


def circled(v: int) -> Token:
    return (CIRC, v)


def format_tokens(tokens: Sequence[Token]) -> str:
    out = []
    for kind, v in tokens:
        if kind == NUM:
            out.append(str(v))
        elif kind == CIRC:
            out.append(f"[{v}]")
        else:
            out.append("o")
    return " ".join(out)


_UNICODE_CIRCLED = {chr(0x2460 + i): i + 1 for i in range(20)}


def parse_tokens(text: str) -> tuple[Token, ...]:
    """Parse the ASCII grammar; ``○`` and ``①``..``⑳`` are accepted as well."""
    tokens: list[Token] = []
    for raw in text.replace("○", " o ").split():
        if raw == "o":
            tokens.append(CIRCLE)
        elif raw in _UNICODE_CIRCLED:
            tokens.append(circled(_UNICODE_CIRCLED[raw]))
        elif raw.startswith("[") and raw.endswith("]") and raw[1:-1].isdigit():
            tokens.append(circled(int(raw[1:-1])))
        elif raw.isdigit():
            tokens.append(number(int(raw)))
        else:
            raise MalformedInput(f"bad word token {raw!r}")
    return tuple(tokens)


@dataclass(frozen=True)
class CircledWord:
    tokens: tuple[Token, ...]
    d: int
    k: int
    n: int

    def __str__(self) -> str:
        return format_tokens(self.tokens)


def validate_word(tokens: Sequence[Token] | str, d: int, k: int, n: int) -> CircledWord:
    if isinstance(tokens, str):
        tokens = parse_tokens(tokens)
    problems = []
    values = [v for kind, v in tokens if kind != EMPTY]
    for kind, v in tokens:
        if kind == CIRC and v > k:
            problems.append(f"[{v}] is circled but {v} > k={k}")
    if sorted(values) != list(range(1, d + 1)):
        repeated = sorted({v for v in values if values.count(v) > 1})
        missing = sorted(set(range(1, d + 1)) - set(values))
        extra = sorted(set(values) - set(range(1, d + 1)))
        if repeated:
            problems.append(f"repeated numbers {repeated}")
        if missing:
            problems.append(f"missing numbers {missing}")
        if extra:
            problems.append(f"numbers outside 1..{d}: {extra}")
    circles = sum(1 for kind, _ in tokens if kind != NUM)
    if circles != n:
        problems.append(f"word has {circles} circles, expected {n}")
    if problems:
        raise MalformedInput("; ".join(problems), problems)
    return CircledWord(tuple(tokens), d, k, n)


def _check_params(d: int, k: int, n: int) -> None:
    if d < 1 or not 0 <= k <= d or n < 0:
        raise ValueError(f"need d >= 1, 0 <= k <= d, n >= 0; got d={d}, k={k}, n={n}")


def enumerate_W(d: int, k: int, n: int) -> Iterator[CircledWord]:
    """All words of W(d, k, n) in lexicographic token order."""
    _check_params(d, k, n)
    used = [False] * (d + 1)
    word: list[Token] = []

    def extend(placed: int, circles: int) -> Iterator[CircledWord]:
        if placed == d and circles == n:
            yield CircledWord(tuple(word), d, k, n)
            return
        for v in range(1, d + 1):
            if not used[v]:
                used[v] = True
                word.append(number(v))
                yield from extend(placed + 1, circles)
                word.pop()
                used[v] = False
        if circles == n:
            return
        for v in range(1, k + 1):
            if not used[v]:
                used[v] = True
                word.append(circled(v))
                yield from extend(placed + 1, circles + 1)
                word.pop()
                used[v] = False
        word.append(CIRCLE)
        yield from extend(placed, circles + 1)
        word.pop()

    return extend(0, 0)


def count_W(d: int, k: int, n: int) -> int:
    return sum(1 for _ in enumerate_W(d, k, n))


def validate_point(x: Sequence[int], d: int, k: int, n: int) -> tuple[int, ...]:
    problems = []
    if len(x) != d:
        problems.append(f"point has {len(x)} coordinates, expected {d}")
    for i, xi in enumerate(x, 1):
        if i > k and xi < 0:
            problems.append(f"coordinate {i} is negative but only the first {k} may be")
    if sum(abs(v) for v in x) > n:
        problems.append(f"coordinate absolute values sum past n={n}")
    if problems:
        raise MalformedInput("; ".join(problems), problems)
    return tuple(x)


def point_to_balls(x: Sequence[int], d: int, k: int, n: int) -> tuple[str, ...]:
    """Balls-and-dots picture of a lattice point.

    |x_i| balls sit between dot i-1 and dot i; a negative x_i puts dot i inside
    the ball right before it. Leftover balls go at the end.
    """
    x = validate_point(x, d, k, n)
    out: list[str] = []
    for xi in x:
        out.extend([BALL] * abs(xi))
        if xi < 0:
            out[-1] = DOT_IN_BALL
        else:
            out.append(DOT)
    out.extend([BALL] * (n - sum(abs(v) for v in x)))
    return tuple(out)


def balls_to_point(config: Sequence[str]) -> tuple[int, ...]:
    x = []
    gap = 0
    for item in config:
        if item == BALL:
            gap += 1
        elif item == DOT:
            x.append(gap)
            gap = 0
        elif item == DOT_IN_BALL:
            x.append(-(gap + 1))
            gap = 0
        else:
            raise MalformedInput(f"bad ball/dot symbol {item!r}")
    return tuple(x)


def enumerate_ball_dot(d: int, k: int, n: int) -> Iterator[tuple[str, ...]]:
    """Sequences of n balls and d dots where only dots 1..k may sit inside a ball."""
    _check_params(d, k, n)
    seq: list[str] = []

    def extend(balls: int, dots: int) -> Iterator[tuple[str, ...]]:
        if balls == n and dots == d:
            yield tuple(seq)
            return
        if balls < n:
            seq.append(BALL)
            yield from extend(balls + 1, dots)
            seq.pop()
        if dots < d:
            seq.append(DOT)
            yield from extend(balls, dots + 1)
            seq.pop()
            if balls < n and dots < k:
                seq.append(DOT_IN_BALL)
                yield from extend(balls + 1, dots + 1)
                seq.pop()

    return extend(0, 0)


def format_balls(config: Sequence[str]) -> str:
    return " ".join(config)


def parse_balls(text: str) -> tuple[str, ...]:
    return tuple(text.split())


def count_lattice_points(d: int, k: int, n: int) -> int:
    """Brute-force count of x in Z^d with |x_1|+..+|x_k|+x_{k+1}+..+x_d <= n, x_{k+1..d} >= 0."""
    _check_params(d, k, n)
    if d > MAX_BRUTE_D or n > MAX_BRUTE_N:
        raise SizeError(f"brute-force lattice count limited to d <= {MAX_BRUTE_D}, n <= {MAX_BRUTE_N}")
    return kernels.lattice_count(d, k, n)
