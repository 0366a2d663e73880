import math

import pytest

from crosspoly.colored import NotInDomain, enumerate_C, enumerate_marked, parse_colored, parse_marked
from crosspoly.ehrhart import coeffs
from crosspoly.identities import (
    alt_involution_k_eq_d,
    alt_involution_small_k,
    check_endpoints,
    inject_d,
    inject_k,
    k_difference_count,
    marked_sign,
    verify_alternating_sums,
    verify_injections,
    verify_lattice,
    verify_theorem,
    verify_words_count,
)
from crosspoly.permutation import parse_cycles
from crosspoly.colored import validate


def test_endpoints_examples():
    r = check_endpoints(2, 2)
    assert r.passed and r.lhs == [2, 4]
    assert check_endpoints(3, 3).lhs == [6, 8]
    for d in range(1, 8):
        assert check_endpoints(d, 0).lhs[1] == 1


def test_inject_d_examples():
    assert str(inject_d(parse_colored("(3 1 2)", 2, 2))) == "(4 3 1 2)"
    q = inject_d(parse_colored("(1:r)(3 2)", 2, 1))
    assert str(q) == "(1:r)(4 3 2)" and q.d == 3


def test_inject_k_examples():
    assert str(inject_k(parse_colored("(3 1 2)", 2, 1))) == "(3 1 2)"
    assert str(inject_k(parse_colored("(2)(3 1)", 2, 1))) == "(2:b)(3 1)"
    # even case: (2 1) sheds 1 onto the cycle of d+1, the rest turns red
    assert str(inject_k(parse_colored("(2 1)(3)", 2, 1))) == "(2:r)(3 1)"


def test_k_difference_examples():
    assert k_difference_count(2, 1, 2) == 2
    for d in range(1, 5):
        for k in range(d):
            assert k_difference_count(d, k, 0) == 0


@pytest.mark.parametrize("d", range(1, 6))
def test_injections_exhaustive(d):
    for k in range(d + 1):
        r = verify_injections(d, k)
        assert r.passed, r.details


def test_alt_small_k_paper_pair():
    raw = parse_cycles("(4:r)(7 2 3:b)(10 6 1:r)(12 5 11)(14 13)(15 8)")
    ground = [x for c, _ in raw for x in c]
    p, _ = validate(raw, 14, 10, ground=ground)
    q = alt_involution_small_k(p)
    assert str(q) == "(4:r)(7 2 3:b)(10 6 1:r)(12 5 11)(15 8 14 13)"
    assert alt_involution_small_k(q) == p


def test_alt_small_k_on_genuine_member():
    p = parse_colored("(4:r)(7 2 3:b)(9:b)(10 6 1:r)(12 5 11)(14 13)(15 8)", 14, 10)
    q = alt_involution_small_k(p)
    assert str(q) == "(4:r)(7 2 3:b)(9:b)(10 6 1:r)(12 5 11)(15 8 14 13)"
    assert q.j == p.j - 1


def test_alt_k_eq_d_example_matching():
    pairs = [
        ("(3 1 2)", "(2:mark)(3 1)"),
        ("(3 2 1)", "(1:mark)(3 2)"),
        ("(1)(3 2)", "(1)(2:mark)(3)"),
        ("(2)(3 1)", "(1:mark)(2)(3)"),
    ]
    for a, b in pairs:
        ma, mb = parse_marked(a, 2, 2), parse_marked(b, 2, 2)
        assert alt_involution_k_eq_d(ma) == mb
        assert alt_involution_k_eq_d(mb) == ma
        assert marked_sign(ma) == -marked_sign(mb)
    fixed = []
    for m in enumerate_marked(2, 2):
        try:
            alt_involution_k_eq_d(m)
        except NotInDomain:
            fixed.append(str(m))
    assert sorted(fixed) == ["(1)(2)(3)", "(2 1)(3)"]


@pytest.mark.parametrize("d", range(1, 7))
def test_alternating_sums_with_involutions(d):
    for k in range(d + 1):
        r = verify_alternating_sums(d, k)
        assert r.passed, r.details
    assert verify_alternating_sums(d, d).witness_count == math.factorial(d)


def test_alternating_sum_examples():
    assert verify_alternating_sums(3, 0).lhs == 0
    assert verify_alternating_sums(3, 3).lhs == 6
    assert verify_alternating_sums(2, 2).lhs == 2


def test_monotone_coefficients():
    for d in range(1, 11):
        for k in range(d + 1):
            c = coeffs(d, k)
            up_d = coeffs(d + 1, k)
            assert all(c[j] <= up_d[j] for j in range(d + 1))
            if k < d:
                up_k = coeffs(d, k + 1)
                assert all(c[j] <= up_k[j] for j in range(d + 1))


def test_report_verifiers():
    assert verify_theorem(4, 2).passed
    assert verify_words_count(3, 1, 2).passed
    r = verify_lattice(3, 2, 3)
    assert r.passed and r.to_dict()["pass"] is True
    assert set(r.to_dict()) >= {"identity", "params", "lhs", "rhs", "witness_count", "pass"}
