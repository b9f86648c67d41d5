from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tri_extremal.exact_geom import (AT_INFINITY, EQUAL, GREATER, LESS,
                                     DegenerateLineError, Point,
                                     ZeroDirectionError, dist_compare,
                                     dist_compare_ext, format_rational,
                                     is_at_infinity, orientation,
                                     ray_intersect)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
points = st.builds(Point, rationals, rationals)


def P(x, y):
    return Point(x, y)


class TestOrientation:
    def test_counterclockwise(self):
        assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1

    def test_collinear(self):
        assert orientation(P(0, 0), P(1, 0), P(2, 0)) == 0

    def test_clockwise(self):
        assert orientation(P(0, 0), P(0, 1), P(1, 1)) == -1

    @given(points, points, points)
    def test_antisymmetric_in_last_two(self, p, q, r):
        assert orientation(p, q, r) == -orientation(p, r, q)


class TestDistCompare:
    def test_greater(self):
        assert dist_compare(P(0, 0), P(1, 0), P(5, 2), P(-3, 1)) == GREATER

    def test_equal_symmetric(self):
        assert dist_compare(P(0, 0), P(1, 0), P(0, 3), P(9, -3)) == EQUAL

    def test_less(self):
        assert dist_compare(P(0, 0), P(0, 1), P(1, 7), P(2, -4)) == LESS

    def test_degenerate_line(self):
        with pytest.raises(DegenerateLineError):
            dist_compare(P(1, 1), P(1, 1), P(0, 0), P(2, 2))

    @given(points, points, points, points)
    def test_swap_is_opposite(self, b, c, x, y):
        if b == c:
            return
        assert dist_compare(b, c, x, y) == -dist_compare(b, c, y, x)

    @given(points, points, points, points,
           st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=10),
           rationals, rationals)
    def test_scale_translate_invariant(self, b, c, x, y, s, tx, ty):
        if b == c:
            return
        t = Point(tx, ty)

        def m(p):
            return Point(s * p.x + t.x, s * p.y + t.y)

        assert dist_compare(b, c, x, y) == dist_compare(m(b), m(c), m(x), m(y))


class TestDistCompareExt:
    def test_infinity_dominates(self):
        assert dist_compare_ext(P(0, 0), P(1, 0), P(0, 100), AT_INFINITY) == LESS

    def test_finite_greater(self):
        assert dist_compare_ext(P(0, 0), P(1, 0), P(0, 2), P(3, 1)) == GREATER

    def test_finite_equal(self):
        assert dist_compare_ext(P(0, 0), P(1, 0), P(5, 1), P(0, 1)) == EQUAL

    def test_degenerate_line(self):
        with pytest.raises(DegenerateLineError):
            dist_compare_ext(P(2, 2), P(2, 2), P(0, 0), AT_INFINITY)


class TestRayIntersect:
    def test_simple_crossing(self):
        assert ray_intersect(P(0, 0), P(1, 0), P(0, 1), P(1, -1)) == P(1, 0)

    def test_parallel(self):
        assert is_at_infinity(ray_intersect(P(0, 0), P(1, 0), P(0, 1), P(1, 0)))

    def test_behind_origin(self):
        assert is_at_infinity(ray_intersect(P(0, 0), P(1, 0), P(-1, 1), P(-1, -1)))

    def test_zero_direction(self):
        with pytest.raises(ZeroDirectionError):
            ray_intersect(P(0, 0), P(0, 0), P(1, 1), P(1, 0))

    @given(points, points, points, points)
    def test_substitution(self, o1, d1, o2, d2):
        if (d1.x == 0 and d1.y == 0) or (d2.x == 0 and d2.y == 0):
            return
        r = ray_intersect(o1, d1, o2, d2)
        if is_at_infinity(r):
            return
        # the point lies on both supporting lines with parameters >= 0
        for o, d in ((o1, d1), (o2, d2)):
            v = r - o
            assert v.x * d.y - v.y * d.x == 0
            if d.x != 0:
                assert v.x / d.x >= 0
            else:
                assert v.y / d.y >= 0


def test_format_rational():
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(-3) == "-3"
    assert format_rational(Fraction(-3, 9)) == "-1/3"
