from fractions import Fraction
from itertools import combinations, product

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st
from pydantic import ValidationError

from geometry import (
    AffineFlat,
    PointSequence,
    affine_intersection,
    affine_rank,
    convex_hulls_intersect,
    hull_intersection_support,
    in_general_position,
    in_strong_general_position,
    lp_feasible,
    moment_curve,
    set_partitions,
    to_fraction,
)

F = Fraction


def _points(coords, dim):
    return PointSequence(points=coords, dim=dim)


def _in_hull(point, part):
    return convex_hulls_intersect([part, [point]]) is not None


# ---- lp_feasible ----

def test_lp_symmetric_solution():
    assert lp_feasible([[1, 1], [1, -1]], [1, 0]) == (F(1, 2), F(1, 2))


def test_lp_infeasible():
    assert lp_feasible([[1, 1]], [-1]) is None


def test_lp_single_variable():
    assert lp_feasible([[1]], [2]) == (F(2),)


def test_lp_malformed_system():
    with pytest.raises(ValueError):
        lp_feasible([[1, 1]], [1, 2])
    with pytest.raises(ValueError):
        lp_feasible([[1, 1], [1]], [1, 2])


def _vertex_oracle(rows, rhs):
    """Feasible iff some linearly independent column set gives a non-negative solution."""
    A = sympy.Matrix(rows)
    b = sympy.Matrix(rhs)
    if all(v == 0 for v in rhs):
        return True
    for k in range(1, A.cols + 1):
        for cols in combinations(range(A.cols), k):
            sub = A.extract(list(range(A.rows)), list(cols))
            if sub.rank() != k or sub.row_join(b).rank() != k:
                continue
            x = (sub.T * sub).inv() * sub.T * b
            if all(v >= 0 for v in x):
                return True
    return False


@settings(max_examples=60)
@given(st.data())
def test_lp_agrees_with_vertex_enumeration(data):
    m = data.draw(st.integers(min_value=1, max_value=3))
    n = data.draw(st.integers(min_value=1, max_value=6))
    entry = st.integers(min_value=-3, max_value=3)
    rows = data.draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=m, max_size=m))
    rhs = data.draw(st.lists(entry, min_size=m, max_size=m))
    x = lp_feasible(rows, rhs)
    assert (x is not None) == _vertex_oracle(rows, rhs)
    if x is not None:
        assert all(v >= 0 for v in x)
        for row, b in zip(rows, rhs):
            assert sum(a * v for a, v in zip(row, x)) == b


# ---- convex hulls ----

def test_crossing_diagonals_meet_at_center():
    assert convex_hulls_intersect([[(0, 0), (2, 2)], [(0, 2), (2, 0)]]) == (F(1), F(1))


def test_distinct_points_do_not_meet():
    assert convex_hulls_intersect([[(0, 0)], [(1, 0)]]) is None


def test_contained_point():
    assert convex_hulls_intersect([[(0, 0), (4, 0), (0, 4)], [(1, 1)]]) == (F(1), F(1))


def test_hull_input_errors():
    with pytest.raises(ValueError):
        convex_hulls_intersect([])
    with pytest.raises(ValueError):
        convex_hulls_intersect([[(0, 0)], []])
    with pytest.raises(ValueError):
        convex_hulls_intersect([[(0, 0)], [(1,)]])
    with pytest.raises(ValueError):
        convex_hulls_intersect([[(0.5, 0)], [(1, 0)]])


coordinate = st.integers(min_value=-3, max_value=3)


@st.composite
def small_parts(draw):
    d = draw(st.integers(min_value=1, max_value=2))
    r = draw(st.integers(min_value=2, max_value=3))
    point = st.tuples(*[coordinate] * d)
    sizes = draw(st.lists(st.integers(min_value=1, max_value=3), min_size=r, max_size=r).filter(lambda s: sum(s) <= 8))
    return [draw(st.lists(point, min_size=k, max_size=k)) for k in sizes], d


def _nonempty_subsets(part):
    return [list(c) for k in range(1, len(part) + 1) for c in combinations(part, k)]


@settings(max_examples=40)
@given(small_parts())
def test_small_subtuples_realise_every_intersection(parts_and_d):
    parts, d = parts_and_d
    budget = (d + 1) * (len(parts) - 1) + 1
    witness = convex_hulls_intersect(parts)
    small = any(
        sum(len(s) for s in choice) <= budget and convex_hulls_intersect(choice) is not None
        for choice in product(*[_nonempty_subsets(p) for p in parts])
    )
    assert (witness is not None) == small
    if witness is not None:
        assert all(_in_hull(witness, part) for part in parts)


@settings(max_examples=40)
@given(small_parts())
def test_support_stays_within_point_budget(parts_and_d):
    parts, d = parts_and_d
    support = hull_intersection_support(parts)
    assume(support is not None)
    budget = (d + 1) * (len(parts) - 1) + 1
    assert sum(len(s) for s in support) <= budget
    chosen = [[part[j] for j in s] for part, s in zip(parts, support)]
    assert convex_hulls_intersect(chosen) is not None


# ---- affine hulls ----

def test_affine_point_on_line():
    flat = affine_intersection([[(0,), (2,)], [(1,)]])
    assert flat.is_point and flat.basepoint == (F(1),)


def test_parallel_lines_are_empty():
    flat = affine_intersection([[(0, 0), (1, 0)], [(0, 1), (1, 1)]])
    assert flat.is_empty and flat.dim == -1


def test_crossing_lines_meet_in_point():
    flat = affine_intersection([[(0, 0), (2, 2)], [(0, 2), (2, 0)]])
    assert flat.dim == 0 and flat.basepoint == (F(1), F(1))


def test_coincident_lines_give_a_line():
    flat = affine_intersection([[(0, 0), (1, 1)], [(2, 2), (3, 3)]])
    assert flat.dim == 1
    x, y = flat.basepoint
    assert x == y
    (u, v), = flat.directions
    assert u == v and u != 0


def test_empty_flat_defaults():
    assert AffineFlat().is_empty and not AffineFlat().is_point


def test_affine_rank():
    assert affine_rank([]) == -1
    assert affine_rank([(1, 1)]) == 0
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 2


# ---- point sequences ----

def test_point_sequence_is_exact():
    P = _points([("1/2", 3)], 2)
    assert P.point(1) == (F(1, 2), F(3))
    assert len(P) == 1
    with pytest.raises(ValueError):
        P.point(2)


def test_point_sequence_rejects_floats_and_bad_dimensions():
    with pytest.raises(ValidationError):
        _points([(0.5,)], 1)
    with pytest.raises(ValidationError):
        _points([(1, 2)], 1)
    with pytest.raises(ValidationError):
        _points([], 0)
    with pytest.raises(ValueError):
        to_fraction(1.5)


# ---- general position ----

def test_collinear_points_not_in_general_position():
    assert not in_general_position(_points([(0, 0), (1, 0), (2, 0)], 2))


def test_parabola_points_in_general_position():
    assert in_general_position(_points([(1, 1), (2, 4), (3, 9)], 2))


def test_distinct_points_on_line_in_general_position():
    assert in_general_position(_points([(0,), (5,), (-3,), (7,)], 1))
    assert not in_general_position(_points([(0,), (5,), (0,)], 1))


def test_strong_general_position_on_line():
    assert in_strong_general_position(_points([(0,), (1,), (2,)], 1))


def test_square_fails_strong_general_position():
    assert not in_strong_general_position(_points([(0, 0), (1, 0), (0, 1), (1, 1)], 2))


def test_equal_chord_slopes_fail_strong_general_position():
    # chords 1-4 and 2-3 of the parabola are parallel
    assert not in_strong_general_position(_points([(t, t * t) for t in (1, 2, 3, 4)], 2))


def test_geometric_moment_curve_in_strong_general_position():
    assert in_strong_general_position(moment_curve(4, 2, 2))


def test_strong_general_position_needs_general_position():
    with pytest.raises(ValueError):
        in_strong_general_position(_points([(0, 0), (1, 0), (2, 0)], 2))


def test_strong_general_position_point_cap():
    with pytest.raises(ValueError):
        in_strong_general_position(moment_curve(9, 1, 2))


# ---- set partitions ----

def test_set_partitions_order():
    assert list(set_partitions((1, 2, 3), 2)) == [((1, 2), (3,)), ((1, 3), (2,)), ((1,), (2, 3))]


@pytest.mark.parametrize("n,r,count", [(5, 3, 25), (4, 2, 7), (4, 4, 1), (3, 4, 0)])
def test_set_partition_counts(n, r, count):
    assert len(list(set_partitions(range(n), r))) == count


# ---- moment curve ----

def test_moment_curve_points():
    assert moment_curve(3, 1, 2).points == ((F(2),), (F(4),), (F(8),))
    assert moment_curve(2, 2, 2).points == ((F(2), F(4)), (F(4), F(16)))


def test_moment_curve_invalid_parameters():
    for n, d, base in [(0, 1, 2), (3, 0, 2), (3, 1, 1)]:
        with pytest.raises(ValueError):
            moment_curve(n, d, base)


@pytest.mark.parametrize("base", [2, 3, F(5, 2)])
@pytest.mark.parametrize("d", [1, 2])
def test_moment_curve_in_general_position(base, d):
    for n in range(1, 10):
        assert in_general_position(moment_curve(n, d, base))
