from fractions import Fraction

import pytest

from hookforest.algebra import X, Polynomial
from hookforest.forest import DegreeSequence, degree_sequences
from hookforest.hookpoly import (
    brute_hookp,
    brute_hookp2,
    lascoux_check,
    postnikov_check,
    transformation_sides,
    verify_hookp,
    verify_hookp2,
    vertex_hook_poly,
    vertex_hook_poly2,
)

from oracles import hook_sum_at

half = Fraction(1, 2)


@pytest.mark.parametrize(
    "d, h, expected",
    [(2, 1, X), (1, 2, (X - 1).scale(half)), (1, 1, X), (3, 2, Polynomial([Fraction(-1, 6), Fraction(5, 6)]))],
)
def test_vertex_hook_poly(d, h, expected):
    assert vertex_hook_poly(d, h) == expected


@pytest.mark.parametrize("d, h", [(0, 1), (1, 0)])
def test_vertex_hook_poly_domain(d, h):
    with pytest.raises(ValueError):
        vertex_hook_poly(d, h)
    with pytest.raises(ValueError):
        vertex_hook_poly2(d, h)


def test_second_form_factors():
    assert vertex_hook_poly2(1, 2) == (X + 2).scale(half)
    assert vertex_hook_poly2(1, 1) == 1
    assert vertex_hook_poly2(2, 1) == 1


class TestBrute:
    def test_chain(self):
        r = DegreeSequence((1, 2))
        assert brute_hookp(r) == (X * (X - 1)).scale(half)
        assert brute_hookp2(r) == (X + 2).scale(half)

    def test_cherry(self):
        r = DegreeSequence((2, 0, 1))
        assert brute_hookp(r) == X
        assert brute_hookp2(r) == 1

    def test_no_internal_vertices(self):
        for r0 in (1, 2, 3):
            assert brute_hookp(DegreeSequence((r0,))) == 1
            assert brute_hookp2(DegreeSequence((r0,))) == 1

    @pytest.mark.parametrize("counts", [(3, 1, 1), (4, 0, 3), (3, 2), (5, 0, 2, 1)])
    def test_values_against_pointwise_oracle(self, counts):
        r = DegreeSequence(counts)
        p, q = brute_hookp(r), brute_hookp2(r)
        for t in [Fraction(v) for v in range(-2, 5)] + [Fraction(1, 3)]:
            assert p(t) == hook_sum_at(counts, t, form=1)
            assert q(t) == hook_sum_at(counts, t, form=2)

    def test_frozen_values(self):
        # computed by the pointwise oracle at t = 0..4 and 0..3
        r = DegreeSequence((5, 0, 2, 1))
        assert [brute_hookp(r)(t) for t in range(5)] == [0, 6, 72, 273, 684]
        assert [brute_hookp2(r)(t) for t in range(4)] == [21, Fraction(63, 2), 44, Fraction(117, 2)]

    def test_degrees(self):
        for r in degree_sequences(7, 4):
            assert brute_hookp(r).degree == r.n
            assert brute_hookp2(r).degree == (r.n - 1 if r.n else 0)


@pytest.mark.parametrize("counts, count", [((1, 2), 1), ((3, 1, 1), 8), ((4, 0, 3), 5)])
def test_reports(counts, count):
    r = DegreeSequence(counts)
    for report in (verify_hookp(r), verify_hookp2(r)):
        assert report.equal
        assert report.forest_count == count
        assert report.to_json()["count"] == str(count)


def test_report_json_shape():
    rep = verify_hookp(DegreeSequence((1, 2))).to_json()
    assert rep == {"r": ["1", "2"], "brute": ["0/1", "-1/2", "1/2"], "closed": ["0/1", "-1/2", "1/2"],
                   "equal": True, "count": "1"}


def test_transformation_identity_small():
    for r in degree_sequences(6, 3):
        for t in (Fraction(0), Fraction(1), Fraction(2), half, Fraction(-3)):
            lhs, rhs = transformation_sides(r, t)
            assert lhs == rhs


def test_transformation_excludes_minus_one():
    with pytest.raises(ValueError):
        transformation_sides(DegreeSequence((1, 2)), -1)


@pytest.mark.parametrize("n, value", [(1, 1), (2, 3), (3, 16), (4, 125), (5, 1296)])
def test_postnikov(n, value):
    lhs, rhs, ok = postnikov_check(n)
    assert ok and lhs == rhs == value


def test_lascoux_small():
    lhs, rhs, ok = lascoux_check(1)
    assert ok and lhs == X + 1
    lhs, rhs, ok = lascoux_check(2)
    assert ok and rhs == Polynomial([1, 3, 2])
    assert lascoux_check(3)[2]


def test_binary_second_form_at_minus_one_is_postnikov():
    # binary type with x = -1 turns the second form into the Postnikov sum
    import math

    for n in range(1, 6):
        r = DegreeSequence((n + 1, 0, n))
        lhs, rhs, _ = postnikov_check(n)
        assert brute_hookp2(r)(-1) * math.factorial(n) == lhs
