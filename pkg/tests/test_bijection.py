import itertools
import math

import pytest

from crosspoly.bijection import forward, inverse, validate_labels
from crosspoly.colored import enumerate_C, parse_colored
from crosspoly.permutation import MalformedInput, inverse_fundamental
from crosspoly.words import enumerate_W, validate_word
from oracles import closed_P


def test_forward_paper_example():
    p = parse_colored("(4:b)(5 1 3:r)(7:b)(8:r)(9 2 6)", 8, 8)
    assert str(forward(p, (4, 3, 3, 1), 4)) == "[8] o 5 1 7 [3] 4 o 2 6"


def test_inverse_paper_example():
    p, labels = inverse(validate_word("[8] o 5 1 7 [3] 4 o 2 6", 8, 8, 4))
    assert str(p) == "(4:b)(5 1 3:r)(7:b)(8:r)(9 2 6)"
    assert labels == (4, 3, 3, 1)


def test_k_zero_example():
    p = parse_colored("(2)(7 3 5 4)(8 1)(9 6)", 8, 0)
    # cycles 1 and 3 on the second circle, cycle 2 on the fourth
    assert str(forward(p, (2, 4, 2), 4)) == "o 2 8 1 o o 7 3 5 4 o 6"


def test_single_cycle_case():
    p = parse_colored("(5 3 1 4 2)", 4, 4)
    assert str(forward(p, (), 3)) == "o o o 3 1 4 2"
    assert inverse(validate_word("o o o 3 1 4 2", 4, 4, 3)) == (p, ())
    q = parse_colored("(5 1 2 3 4)", 4, 2)
    assert inverse(forward(q, (), 0)) == (q, ())


def test_labels_validation():
    with pytest.raises(MalformedInput):
        validate_labels((1, 5), 2, 4)
    with pytest.raises(MalformedInput):
        validate_labels((1,), 2, 4)


def test_every_word_of_small_case_round_trips():
    for w in enumerate_W(3, 2, 2):
        p, labels = inverse(w)
        assert forward(p, labels, 2) == w


@pytest.mark.parametrize("d", range(1, 5))
def test_round_trips_both_ways(d):
    for k in range(d + 1):
        for n in range(4):
            words = set(enumerate_W(d, k, n))
            images = set()
            for j in range(d + 1):
                for p in enumerate_C(d, k, j):
                    for labels in itertools.product(range(1, n + 1), repeat=j):
                        w = forward(p, labels, n)
                        assert inverse(w) == (p, labels)
                        images.add(w)
            assert images == words
            assert len(words) == math.factorial(d) * closed_P(d, k, n)


@pytest.mark.parametrize("d", range(1, 6))
def test_suffix_closes_single_cycle(d):
    for p in enumerate_C(d, d, 1):
        for label in (1, 2):
            w = forward(p, (label,), 2)
            suffix = []
            for kind, v in reversed(w.tokens):
                if kind != 0:
                    break
                suffix.append(v)
            assert len(inverse_fundamental([d + 1, *reversed(suffix)])) == 1
