"""Bijection between labelled colored permutations and circled words.

``forward`` sends a pair (p, a) with p in C(d, k, j) and a in [n]^j to a word
of W(d, k, n): cycle i of p goes to circle a[i], each circle's cycles are
turned into a marked permutation and flattened in front of that circle, and
the cycle holding d+1 is flattened (without d+1) after the last circle.
``inverse`` undoes it block by block.
"""

from __future__ import annotations

from typing import Sequence

from .colored import (
    ColoredPermutation,
    _marked_to_pairs,
    _pairs_to_marked,
    validate,
)
from .permutation import MalformedInput, fundamental, inverse_fundamental, to_canonical
from .words import CIRC, CIRCLE, NUM, CircledWord, Token, circled, number, validate_word

LabelAssignment = tuple[int, ...]

__all__ = ["LabelAssignment", "validate_labels", "forward", "inverse", "block_words"]


def validate_labels(labels: Sequence[int], j: int, n: int) -> LabelAssignment:
    labels = tuple(labels)
    if len(labels) != j:
        raise MalformedInput(f"expected {j} labels, got {len(labels)}")
    bad = [a for a in labels if not 1 <= a <= n]
    if bad:
        raise MalformedInput(f"labels {bad} fall outside 1..{n}")
    return labels


def block_words(p: ColoredPermutation, labels: Sequence[int], n: int) -> list[tuple[Token, ...]]:
    """The n per-circle words of the forward map, each ending with its circle."""
    blocks = []
    for circle in range(1, n + 1):
        chosen = [i for i, a in enumerate(labels) if a == circle]
        cycles = tuple(p.cycles[i] for i in chosen)
        colors = tuple(p.colors[i] for i in chosen)
        marked, mark = _pairs_to_marked(cycles, colors)
        rest = tuple(c for c in marked if c != (mark,))
        word = [number(x) for x in fundamental(rest)]
        word.append(circled(mark) if mark is not None else CIRCLE)
        blocks.append(tuple(word))
    return blocks


def forward(p: ColoredPermutation, labels: Sequence[int], n: int) -> CircledWord:
    if not p.is_member():
        raise MalformedInput(f"{p} is not in C({p.d}, {p.k})")
    labels = validate_labels(labels, p.j, n)
    tokens: list[Token] = []
    for block in block_words(p, labels, n):
        tokens.extend(block)
    last = p.cycles[-1]
    if last[0] != p.d + 1:
        raise MalformedInput(f"last cycle of {p} does not contain {p.d + 1}")
    tokens.extend(number(x) for x in last[1:])
    return CircledWord(tuple(tokens), p.d, p.k, n)


def inverse(w: CircledWord) -> tuple[ColoredPermutation, LabelAssignment]:
    d, k, n = w.d, w.k, w.n
    validate_word(w.tokens, d, k, n)
    blocks: list[list[Token]] = [[]]
    for tok in w.tokens:
        blocks[-1].append(tok)
        if tok[0] != NUM:
            blocks.append([])
    suffix = [v for _, v in blocks.pop()]
    tail = inverse_fundamental([d + 1, *suffix])
    if len(tail) != 1:
        raise MalformedInput("suffix does not close into a single cycle")

    pieces: list[tuple[tuple[int, ...], str | None, int]] = []
    for index, block in enumerate(blocks, 1):
        *nums, circle = block
        cycles = list(inverse_fundamental([v for _, v in nums]))
        mark = None
        if circle[0] == CIRC:
            mark = circle[1]
            cycles.append((mark,))
        colored_cycles, colors = _marked_to_pairs(to_canonical(cycles), mark, k)
        pieces.extend((c, col, index) for c, col in zip(colored_cycles, colors))

    p, _ = validate([(c, col) for c, col, _ in pieces] + [(tail[0], None)], d, k)
    origin = {max(c): index for c, _, index in pieces}
    labels = tuple(origin[c[0]] for c in p.cycles[:-1])
    return p, labels
