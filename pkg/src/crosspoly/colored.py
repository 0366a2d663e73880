"""Colored permutations, the parity sign-reversing involution and marked permutations.

An element of C(d, k) is a permutation of {1..d+1} in canonical cycle form where
each cycle whose entries are all <= k is colored red ("r") or blue ("b") and has
odd length; every other cycle is uncolored. Dropping the parity requirement
gives the signed superset, with sign (-1)^(number of even red cycles).

Text form: ``(4:r)(7 2 3:b)(10 6 1:r)(14 11 5 12 13)(15 8)``. A marked
permutation tags its red singleton with ``:mark``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .permutation import (
    Cycle,
    CycleForm,
    MalformedInput,
    format_cycles,
    fundamental,
    inverse_fundamental,
    parse_cycles,
    to_canonical,
)
from .words import CIRCLE, CircledWord, Token, circled, number

RED = "r"
BLUE = "b"
COLORS = (BLUE, RED)

__all__ = [
    "RED",
    "BLUE",
    "NotInDomain",
    "InternalConsistencyError",
    "ColoredPermutation",
    "MarkedPermutation",
    "validate",
    "parse_colored",
    "parse_marked",
    "enumerate_C",
    "enumerate_signed",
    "enumerate_marked",
    "sign",
    "theorem_involution",
    "to_marked",
    "from_marked",
    "marked_to_word1",
]


class NotInDomain(ValueError):
    """The object is a fixed point of (or lies outside) the requested map."""


class InternalConsistencyError(RuntimeError):
    """A state that valid inputs can never produce."""


@dataclass(frozen=True)
class ColoredPermutation:
    cycles: CycleForm
    colors: tuple[str | None, ...]
    d: int
    k: int

    @property
    def j(self) -> int:
        return len(self.cycles) - 1

    def is_member(self) -> bool:
        """True when every colored cycle is odd, i.e. the object lies in C(d, k)."""
        return all(c is None or len(cyc) % 2 for cyc, c in zip(self.cycles, self.colors))

    def __str__(self) -> str:
        return format_cycles(self.cycles, self.colors)


@dataclass(frozen=True)
class MarkedPermutation:
    """Uncolored permutation with at most one red singleton ``(mark)``, mark <= k."""

    cycles: CycleForm
    mark: int | None
    d: int
    k: int

    def __str__(self) -> str:
        tags = ["mark" if c == (self.mark,) else None for c in self.cycles]
        return format_cycles(self.cycles, tags)

    def without_mark(self) -> CycleForm:
        return tuple(c for c in self.cycles if c != (self.mark,))


def _check_ground(cycles: CycleForm, d: int, problems: list[str]) -> None:
    elements = sorted(x for c in cycles for x in c)
    if elements != list(range(1, d + 2)):
        problems.append(f"cycles do not partition {{1..{d + 1}}}")


def validate(
    raw: Sequence[tuple[Sequence[int], str | None]],
    d: int,
    k: int,
    *,
    signed: bool = False,
    ground: Sequence[int] | None = None,
) -> tuple[ColoredPermutation, int]:
    """Canonicalize and check a list of ``(cycle, color)`` pairs.

    Returns the object and j (cycle count minus one). Raises
    :class:`MalformedInput` listing every violated rule. ``signed=True``
    admits even colored cycles. ``ground`` replaces {1..d+1} for blocks of
    the word bijection.
    """
    problems: list[str] = []
    colors_by_lead = {}
    try:
        cycles = to_canonical([c for c, _ in raw])
    except MalformedInput as exc:
        raise MalformedInput(str(exc), exc.diagnostics) from None
    for cyc, color in raw:
        if color not in (None, RED, BLUE):
            problems.append(f"unknown color tag {color!r}")
        colors_by_lead[max(cyc)] = color
    if ground is None:
        _check_ground(cycles, d, problems)
    elif sorted(x for c in cycles for x in c) != sorted(ground):
        problems.append("cycles do not partition the given ground set")
    colors = tuple(colors_by_lead[c[0]] for c in cycles)
    for cyc, color in zip(cycles, colors):
        low = max(cyc) <= k
        text = format_cycles((cyc,), (color,))
        if low and color is None:
            problems.append(f"{text} has all elements <= {k} and must be colored")
        if not low and color is not None:
            problems.append(f"{text} contains an element > {k} and cannot be colored")
        if color is not None and not signed and len(cyc) % 2 == 0:
            problems.append(f"{text} is an even colored cycle")
    if problems:
        raise MalformedInput("; ".join(problems), problems)
    p = ColoredPermutation(cycles, colors, d, k)
    return p, p.j


def parse_colored(text: str, d: int | None, k: int, *, signed: bool = False) -> ColoredPermutation:
    raw = parse_cycles(text)
    if d is None:
        d = max(x for c, _ in raw for x in c) - 1
    return validate(raw, d, k, signed=signed)[0]


def parse_marked(text: str, d: int | None, k: int) -> MarkedPermutation:
    raw = parse_cycles(text)
    if d is None:
        d = max(x for c, _ in raw for x in c) - 1
    marks = [c for c, tag in raw if tag is not None]
    problems = []
    if any(tag not in (None, "mark") for _, tag in raw):
        problems.append("only the ':mark' tag is allowed on a marked permutation")
    if len(marks) > 1:
        problems.append("at most one cycle may be marked")
    mark = None
    if marks:
        if len(marks[0]) != 1:
            problems.append(f"marked cycle {format_cycles((marks[0],))} is not a singleton")
        elif marks[0][0] > k:
            problems.append(f"mark {marks[0][0]} exceeds k={k}")
        mark = marks[0][0]
    try:
        cycles = to_canonical([c for c, _ in raw])
    except MalformedInput as exc:
        problems.extend(exc.diagnostics)
        cycles = ()
    else:
        _check_ground(cycles, d, problems)
    if problems:
        raise MalformedInput("; ".join(problems), problems)
    return MarkedPermutation(cycles, mark, d, k)


def _canonical_forms(m: int, ncycles: int | None = None) -> Iterator[CycleForm]:
    # the fundamental bijection turns one-line words into canonical cycle forms
    for word in itertools.permutations(range(1, m + 1)):
        cycles = inverse_fundamental(word)
        if ncycles is None or len(cycles) == ncycles:
            yield cycles


def _colorings(cycles: CycleForm, d: int, k: int, signed: bool) -> Iterator[ColoredPermutation]:
    low = [max(c) <= k for c in cycles]
    if not signed and any(is_low and len(c) % 2 == 0 for c, is_low in zip(cycles, low)):
        return
    slots = [COLORS if is_low else (None,) for is_low in low]
    for colors in itertools.product(*slots):
        yield ColoredPermutation(cycles, colors, d, k)


def _enumerate(d: int, k: int, j: int, signed: bool) -> Iterator[ColoredPermutation]:
    if d < 1 or not 0 <= k <= d:
        raise ValueError(f"need d >= 1 and 0 <= k <= d, got d={d}, k={k}")
    if not 0 <= j <= d:
        return iter(())
    objs = [
        p
        for cycles in _canonical_forms(d + 1, j + 1)
        for p in _colorings(cycles, d, k, signed)
    ]
    objs.sort(key=str)
    return iter(objs)


def enumerate_C(d: int, k: int, j: int) -> Iterator[ColoredPermutation]:
    """Every element of C(d, k) with j+1 cycles, ordered by text form."""
    return _enumerate(d, k, j, signed=False)


def enumerate_signed(d: int, k: int, j: int) -> Iterator[ColoredPermutation]:
    """The signed superset: colored cycles of any length."""
    return _enumerate(d, k, j, signed=True)


def sign(p: ColoredPermutation) -> int:
    even_red = sum(1 for c, col in zip(p.cycles, p.colors) if col == RED and len(c) % 2 == 0)
    return -1 if even_red % 2 else 1


def theorem_involution(p: ColoredPermutation) -> ColoredPermutation:
    """Flip the color of the first even colored cycle."""
    for idx, (cyc, color) in enumerate(zip(p.cycles, p.colors)):
        if color is not None and len(cyc) % 2 == 0:
            colors = list(p.colors)
            colors[idx] = BLUE if color == RED else RED
            return ColoredPermutation(p.cycles, tuple(colors), p.d, p.k)
    raise NotInDomain(f"{p} has no even colored cycle")


# Blockwise cores. They work on any ground set; membership "all <= k" is global.


def _pairs_to_marked(cycles: CycleForm, colors: Sequence[str | None]) -> tuple[CycleForm, int | None]:
    plain = [list(c) for c, col in zip(cycles, colors) if col != RED]
    reds = [list(c) for c, col in zip(cycles, colors) if col == RED]
    mark = None
    for i in range(0, len(reds) - 1, 2):
        reds[i + 1].append(reds[i].pop())
    if len(reds) % 2:
        mark = reds[-1].pop()
        plain.append([mark])
    plain.extend(c for c in reds if c)
    return to_canonical(plain), mark


def _marked_to_pairs(
    cycles: CycleForm, mark: int | None, k: int
) -> tuple[CycleForm, tuple[str | None, ...]]:
    out: list[tuple[Cycle, str | None]] = []
    evens: list[list[int]] = []
    for c in cycles:
        if mark is not None and c == (mark,):
            continue
        if max(c) > k:
            out.append((c, None))
        elif len(c) % 2:
            out.append((c, BLUE))
        else:
            evens.append(list(c))
    if mark is not None:
        # the mark behaves as one more cycle after the evens in the tail rule
        evens.append([mark])
    h = len(evens)
    while h > 0:
        last = evens[h - 1]
        if h == 1 or last[-1] > evens[h - 2][0]:
            x = last.pop()
            out.append(((x,), RED))
            if last:
                out.append((tuple(last), RED))
            h -= 1
        else:
            evens[h - 2].append(last.pop())
            for c in (evens[h - 2], last):
                if c:
                    out.append((tuple(c), RED))
            h -= 2
    for c, col in out:
        if col == RED and len(c) % 2 == 0:
            raise InternalConsistencyError(f"tail rule produced even red cycle {c}")
    canon = to_canonical([c for c, _ in out])
    color_of = {max(c): col for c, col in out}
    return canon, tuple(color_of[c[0]] for c in canon)


def to_marked(p: ColoredPermutation) -> MarkedPermutation:
    """Merge red cycles pairwise tail-to-tail; an odd leftover sheds a red singleton."""
    if not p.is_member():
        raise NotInDomain(f"{p} has an even colored cycle")
    cycles, mark = _pairs_to_marked(p.cycles, p.colors)
    return MarkedPermutation(cycles, mark, p.d, p.k)


def from_marked(m: MarkedPermutation) -> ColoredPermutation:
    cycles, colors = _marked_to_pairs(m.cycles, m.mark, m.k)
    return ColoredPermutation(cycles, colors, m.d, m.k)


def enumerate_marked(d: int, k: int) -> Iterator[MarkedPermutation]:
    """Permutations of {1..d+1}, optionally with one red singleton (i), i <= k."""
    for cycles in _canonical_forms(d + 1):
        yield MarkedPermutation(cycles, None, d, k)
        for c in cycles:
            if len(c) == 1 and c[0] <= k:
                yield MarkedPermutation(cycles, c[0], d, k)


def marked_to_word1(m: MarkedPermutation) -> CircledWord:
    """One-circle word: the flattened permutation, then the circle (holding the mark if any)."""
    tokens: list[Token] = [number(x) for x in fundamental(m.without_mark())]
    tokens.append(circled(m.mark) if m.mark is not None else CIRCLE)
    return CircledWord(tuple(tokens), m.d, m.k, 1)
