"""Canonical cycle form and the fundamental bijection.

A cycle form is a tuple of tuples. In canonical form every cycle starts with
its largest element and cycles are sorted by that leading element. The ground
set may be any finite set of positive integers (blocks of the word bijection
are partial permutations); the empty tuple is the empty permutation.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Cycle = tuple[int, ...]
CycleForm = tuple[Cycle, ...]

__all__ = [
    "Cycle",
    "CycleForm",
    "MalformedInput",
    "to_canonical",
    "is_canonical",
    "fundamental",
    "inverse_fundamental",
    "one_line_to_cycles",
    "cycles_to_one_line",
    "format_cycles",
    "parse_cycles",
    "format_word",
    "parse_word",
]


class MalformedInput(ValueError):
    """Raised for inputs that are not valid permutations, words or objects."""

    def __init__(self, message: str, diagnostics: Sequence[str] = ()):
        super().__init__(message)
        self.diagnostics = list(diagnostics) or [message]


def _rotate_max_first(cycle: Sequence[int]) -> Cycle:
    top = cycle.index(max(cycle))
    return tuple(cycle[top:]) + tuple(cycle[:top])


def to_canonical(cycles: Iterable[Sequence[int]]) -> CycleForm:
    """Rotate each cycle so its maximum leads, then sort cycles by that maximum."""
    seen: set[int] = set()
    rotated = []
    for cycle in cycles:
        if len(cycle) == 0:
            raise MalformedInput("empty cycle")
        for x in cycle:
            if not isinstance(x, int) or x < 1:
                raise MalformedInput(f"cycle entries must be positive integers, got {x!r}")
            if x in seen:
                raise MalformedInput(f"element {x} appears more than once")
            seen.add(x)
        rotated.append(_rotate_max_first(cycle))
    rotated.sort(key=lambda c: c[0])
    return tuple(rotated)


def is_canonical(cycles: CycleForm) -> bool:
    try:
        return to_canonical(cycles) == tuple(tuple(c) for c in cycles)
    except MalformedInput:
        return False


def fundamental(cycles: CycleForm) -> tuple[int, ...]:
    """Erase the parentheses of a canonical cycle form."""
    return tuple(x for cycle in cycles for x in cycle)


def inverse_fundamental(word: Sequence[int]) -> CycleForm:
    """Cut ``word`` before every left-to-right maximum."""
    if len(set(word)) != len(word):
        raise MalformedInput(f"word has repeated entries: {' '.join(map(str, word))}")
    cycles: list[list[int]] = []
    record = 0
    for x in word:
        if x > record:
            cycles.append([x])
            record = x
        else:
            cycles[-1].append(x)
    return tuple(tuple(c) for c in cycles)


def one_line_to_cycles(perm: Sequence[int]) -> CycleForm:
    """Canonical cycles of a permutation of {1..m} given as perm[i-1] = image of i."""
    m = len(perm)
    seen = [False] * (m + 1)
    cycles = []
    for start in range(m, 0, -1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        x = perm[start - 1]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = perm[x - 1]
        cycles.append(tuple(cycle))
    # scanning from the top makes each discovered start the cycle maximum
    cycles.reverse()
    return tuple(cycles)


def cycles_to_one_line(cycles: CycleForm) -> tuple[int, ...]:
    m = sum(len(c) for c in cycles)
    perm = [0] * m
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            perm[a - 1] = b
    return tuple(perm)


# Text grammar: "(5 1 3)(7)", optionally with ":tag" before the closing paren.
_CYCLE_RE = re.compile(r"\(\s*([0-9 ]+?)\s*(?::\s*([a-z]+)\s*)?\)")


def format_cycles(cycles: CycleForm, tags: Sequence[str | None] | None = None) -> str:
    tags = tags or [None] * len(cycles)
    parts = []
    for c, tag in zip(cycles, tags):
        body = " ".join(map(str, c))
        parts.append(f"({body}:{tag})" if tag else f"({body})")
    return "".join(parts)


def parse_cycles(text: str) -> list[tuple[Cycle, str | None]]:
    """Parse ``"(4:r)(7 2 3:b)(15 8)"`` into ``[(cycle, tag), ...]`` in textual order."""
    text = text.strip()
    if text in ("", "e", "ε"):
        return []
    out = []
    pos = 0
    for match in _CYCLE_RE.finditer(text):
        if text[pos:match.start()].strip():
            raise MalformedInput(f"unexpected text {text[pos:match.start()]!r} in {text!r}")
        pos = match.end()
        out.append((tuple(int(t) for t in match.group(1).split()), match.group(2)))
    if text[pos:].strip() or not out:
        raise MalformedInput(f"cannot parse cycle form {text!r}")
    return out


def format_word(word: Sequence[int]) -> str:
    return " ".join(map(str, word))


def parse_word(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise MalformedInput(f"cannot parse word {text!r}") from exc
