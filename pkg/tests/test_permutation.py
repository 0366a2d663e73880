import itertools
import math

import pytest
from hypothesis import given, strategies as st

from crosspoly.permutation import (
    MalformedInput,
    cycles_to_one_line,
    format_cycles,
    fundamental,
    inverse_fundamental,
    one_line_to_cycles,
    parse_cycles,
    to_canonical,
)


def test_to_canonical_rotates_and_sorts():
    assert to_canonical([(1, 5), (3,)]) == ((3,), (5, 1))
    assert to_canonical([(3, 5, 1)]) == ((5, 1, 3),)


def test_to_canonical_rejects_duplicates():
    with pytest.raises(MalformedInput):
        to_canonical([(2, 9), (7, 3, 5, 4), (1, 8), (6, 9)])


def test_fundamental_examples():
    assert fundamental(((5, 1), (7,), (3,))) == (5, 1, 7, 3)
    assert fundamental(()) == ()
    assert fundamental(((2,), (8, 1))) == (2, 8, 1)


def test_inverse_fundamental_examples():
    assert inverse_fundamental((5, 1, 7)) == ((5, 1), (7,))
    assert inverse_fundamental(()) == ()
    assert inverse_fundamental((9, 2, 6)) == ((9, 2, 6),)
    with pytest.raises(MalformedInput):
        inverse_fundamental((3, 1, 3))


@pytest.mark.parametrize("m", range(8))
def test_fundamental_is_bijection(m):
    forms = set()
    for word in itertools.permutations(range(1, m + 1)):
        cycles = inverse_fundamental(word)
        assert to_canonical(cycles) == cycles
        assert fundamental(cycles) == word
        forms.add(cycles)
    assert len(forms) == math.factorial(m)


@given(st.sets(st.integers(1, 40), max_size=7).flatmap(lambda s: st.permutations(sorted(s))))
def test_round_trip_on_arbitrary_ground_sets(word):
    cycles = inverse_fundamental(word)
    assert inverse_fundamental(fundamental(cycles)) == cycles
    assert to_canonical(cycles) == cycles
    assert to_canonical(to_canonical(cycles)) == to_canonical(cycles)


@given(st.permutations(list(range(1, 8))))
def test_one_line_and_cycles_agree(perm):
    cycles = one_line_to_cycles(perm)
    assert to_canonical(cycles) == cycles
    assert cycles_to_one_line(cycles) == tuple(perm)


def test_text_round_trip():
    text = "(14 11 5 12 13)(4:r)(7 2 3:b)"
    parsed = parse_cycles(text)
    assert parsed[1] == ((4,), "r")
    canon = to_canonical([c for c, _ in parsed])
    assert format_cycles(canon) == "(4)(7 2 3)(14 11 5 12 13)"
    with pytest.raises(MalformedInput):
        parse_cycles("(1 2")
