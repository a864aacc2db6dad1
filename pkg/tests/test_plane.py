from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import plane_points, rationals
from oracles import lines_through, meet_points, on_line
from tropgeom.arith import NEG_INF
from tropgeom.errors import DegenerateLine, IdenticalLines, IdenticalPoints, NotIncident
from tropgeom.plane import (
    RayLabel,
    TropLine,
    common_line,
    general_position,
    incidence,
    is_coaxial_lines,
    is_coaxial_points,
    is_stable_marked_line,
    line_from_coeffs,
    line_intersection,
    lines_through_coaxial,
    point,
    stable_intersect,
    stable_line,
)


def V(x, y):
    return TropLine.through_vertex(point(x, y))


@pytest.mark.parametrize("coeffs, vertex", [((0, 0, 0), (0, 0)), ((0, 1, 2), (2, 1)), ((1, 1, 1), (0, 0))])
def test_vertex_examples(coeffs, vertex):
    assert line_from_coeffs(*coeffs).vertex == vertex


def test_degenerate_line():
    with pytest.raises(DegenerateLine):
        TropLine(NEG_INF, 0, 0)


def test_incidence_examples():
    L = TropLine(0, 0, 0)
    assert incidence(point(0, 0), L) == (True, RayLabel.VERTEX)
    assert incidence(point(-2, 0), L) == (True, RayLabel.LEFT)
    assert incidence(point(0, -5), L) == (True, RayLabel.DOWN)
    assert incidence(point(3, 3), L) == (True, RayLabel.DIAG)
    assert incidence(point(1, 2), L) == (False, None)


def test_stable_line_examples():
    L = stable_line(point(0, 0), point(2, 1))
    assert L.coeffs == (1, 2, 2) and L.vertex == (1, 0)
    assert stable_line(point(0, 0), point(1, 1)).vertex == (0, 0)
    L = stable_line(point(0, 0), point(-2, 0))
    assert L.vertex in ((0, 0), (-2, 0))
    assert is_stable_marked_line(L, [point(0, 0), point(-2, 0)])
    with pytest.raises(IdenticalPoints):
        stable_line(point(1, 1), point(1, 1))


def test_stable_vertex_per_axis():
    # which point of a coaxial pair becomes the vertex
    assert stable_line(point(0, 0), point(3, 3)).vertex == (0, 0)
    assert stable_line(point(0, 0), point(-3, 0)).vertex == (0, 0)
    assert stable_line(point(0, 0), point(0, -3)).vertex == (0, 0)
    assert stable_line(point(0, -3), point(0, 0)).vertex == (0, 0)


def test_stable_intersect_examples():
    assert stable_intersect(TropLine(0, 0, 0), TropLine(0, 1, 2)) == (1, 1)
    p = stable_intersect(V(0, 0), V(5, 0))
    assert incidence(p, V(0, 0)) and incidence(p, V(5, 0))
    assert p == (0, 0)
    with pytest.raises(IdenticalLines):
        stable_intersect(TropLine(0, 0, 0), TropLine(1, 1, 1))


def test_coaxial_examples():
    assert is_coaxial_points(point(0, 0), point(1, 1))
    assert not is_coaxial_points(point(0, 0), point(2, 1))
    assert is_coaxial_points(point(0, 0), point(3, 0))
    assert len(set(lines_through_coaxial(point(0, 0), point(3, 0)))) == 3
    assert is_coaxial_lines(V(0, 0), V(1, 1))
    assert not is_coaxial_lines(V(0, 0), V(2, 1))
    assert is_coaxial_lines(V(0, 0), V(0, -4))
    assert is_coaxial_lines(V(2, 2), V(2, 2))


def test_general_position_examples():
    assert general_position(TropLine(0, 0, 0), TropLine(0, 1, 2))
    assert not general_position(V(0, 0), V(3, 0))
    assert general_position(V(0, 0), V(1, -1))


def test_stable_marked_line_examples():
    L = stable_line(point(0, 0), point(2, 1))
    assert is_stable_marked_line(L, [point(0, 0), point(2, 1)])
    assert is_stable_marked_line(V(0, 0), [point(0, 0), point(2, 2)])
    assert not is_stable_marked_line(V(-1, -1), [point(0, 0), point(2, 2)])
    with pytest.raises(NotIncident):
        is_stable_marked_line(V(0, 0), [point(1, 2), point(2, 2)])


@given(plane_points, plane_points)
def test_stable_line_contains_both(p, q):
    assume(p != q)
    L = stable_line(p, q)
    assert incidence(p, L) and incidence(q, L)
    assert is_stable_marked_line(L, [p, q])


@given(plane_points, plane_points)
def test_stable_intersect_on_both(v1, v2):
    assume(v1 != v2)
    L1, L2 = TropLine.through_vertex(v1), TropLine.through_vertex(v2)
    X = stable_intersect(L1, L2)
    assert incidence(X, L1) and incidence(X, L2)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_unique_line_through_noncoaxial_pair(a, b, c, d):
    p, q = point(Fraction(a, 2), Fraction(b, 2)), point(Fraction(c, 2), Fraction(d, 2))
    assume(p != q and not is_coaxial_points(p, q))
    assert lines_through(p, q) == [tuple(stable_line(p, q).vertex)]


@given(plane_points, plane_points)
def test_general_position_matches_set_oracle(v1, v2):
    assume(v1 != v2)
    L1, L2 = TropLine.through_vertex(v1), TropLine.through_vertex(v2)
    pts, rays = meet_points(v1, v2)
    meet = line_intersection(L1, L2)
    if general_position(L1, L2):
        assert not rays and pts == {stable_intersect(L1, L2)}
    else:
        assert rays
    assert set(meet.points) <= pts


@given(plane_points, st.sampled_from([(1, 0), (0, 1), (1, 1)]), st.integers(1, 5))
def test_coaxial_pairs_have_many_lines(p, d, t):
    q = p.shift(d[0] * t, d[1] * t)
    lines = lines_through_coaxial(p, q)
    assert len(set(lines)) == 3
    assert lines[0] == stable_line(p, q)
    for L in lines:
        assert incidence(p, L) and incidence(q, L)


@given(rationals, rationals, rationals, rationals)
def test_coefficient_scaling(a, b, c, t):
    L, M = TropLine(a, b, c), TropLine(a + t, b + t, c + t)
    assert L == M and L.vertex == M.vertex and L.canonical() == M.canonical()


@given(plane_points, plane_points)
def test_cross_product_duality(p, q):
    # the point (x, y) is dual to the line with coefficients (x, y, 0)
    assume(p != q)
    a, b, c = stable_line(p, q).coeffs
    X = stable_intersect(TropLine(p.x, p.y, 0), TropLine(q.x, q.y, 0))
    assert X == (a - c, b - c)


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=4))
def test_common_line_matches_grid_oracle(raw):
    pts = [point(x, y) for x, y in dict.fromkeys(raw)]
    L = common_line(pts)
    grid = [(Fraction(i, 2), Fraction(j, 2)) for i in range(-20, 21) for j in range(-20, 21)]
    found = any(all(on_line(p, v) for p in pts) for v in grid)
    if L is None:
        assert not found
    else:
        assert all(incidence(p, L) for p in pts)
        assert found
