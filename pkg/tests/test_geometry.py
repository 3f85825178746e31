# -*- coding: utf-8 -*-
from fractions import Fraction
import pytest
import sympy as sp
from modules.errors import ConfigInvalid, DegeneratePolytope, NoHarmonicFamily
from modules.geometry import (
    BoundEntry, BoundKind, BoundsRegistry, Cube, diamond, dimension_bounds, direction_from_slope,
    harmonic_index_extract, harmonic_polygon, hausdorff_to_circle, line_family_setup, parse_coordinate, polytope,
    polytope_from_json, simplex, square, vertices
)

TRIANGLE = polytope(2, [((0, -1), 1), (("4/5", "3/5"), 1), (("-4/5", "3/5"), 1)], "triangle")


def test_square_reads_as_three_slots():
    family = harmonic_index_extract(square())
    assert family.m == 3
    assert family.slots == (-1, 0, 1)
    assert sorted(family.faces[2]) == [1, 3]
    assert family.residual == ()


def test_diamond_reads_as_two_slots():
    family = harmonic_index_extract(diamond())
    assert family.m == 2
    assert sp.simplify(family.step - sp.sqrt(2)) == 0


def test_tilted_line_sees_four_slots():
    family = harmonic_index_extract(square(), direction_from_slope(Fraction(1, 3)))
    assert family.m == 4
    bounds = dimension_bounds(square(), line_direction=direction_from_slope("1/3"))
    assert (bounds.lo, bounds.hi) == (1 + Fraction(4, 7), Fraction(7, 4))


@pytest.mark.parametrize("k", range(1, 17))
def test_harmonic_polygons_read_as_full_progressions(k):
    assert harmonic_index_extract(harmonic_polygon(k).polytope).m == 2 * k + 1


def test_harmonic_polygon_faces():
    first = harmonic_polygon(1)
    assert first.polytope.m == 4 and first.duplicates == 2
    assert {plane.u for plane in first.polytope.hyperplanes} == {plane.u for plane in square().hyperplanes}
    second = harmonic_polygon(2)
    assert second.polytope.m == 8 and second.duplicates == 2
    with pytest.raises(ConfigInvalid):
        harmonic_polygon(2, n=3)


def test_hausdorff_distance_shrinks():
    distances = [float(hausdorff_to_circle(harmonic_polygon(k).polytope)) for k in (1, 2, 4, 8)]
    assert distances == sorted(distances, reverse=True)
    assert len(set(distances)) == 4
    assert distances[0] == pytest.approx(2 ** 0.5 - 1)


def test_square_vertices_are_exact():
    assert set(vertices(square())) == {(1, 1), (-1, 1), (-1, -1), (1, -1)}


def test_segment_bounds_from_the_registry():
    bounds = dimension_bounds(square())
    assert (bounds.lo, bounds.hi) == (Fraction(17, 11), Fraction(7, 4))
    flat = dimension_bounds(diamond())
    assert (flat.lo, flat.hi) == (Fraction(3, 2), Fraction(3, 2))


def test_generic_bounds_for_long_progressions():
    bounds = dimension_bounds(harmonic_polygon(2).polytope)
    assert bounds.m == 5
    assert (bounds.lo, bounds.hi) == (1 + Fraction(4, 7), 1 + Fraction(4, 5))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_simplex_cube_bounds_coincide(n):
    bounds = dimension_bounds(simplex(n), kind=BoundKind.CUBE)
    assert bounds.lo == bounds.hi == n - Fraction(1, n + 1)


def test_registry_miss_falls_back_to_trivial_bounds():
    bounds = dimension_bounds(square(), BoundsRegistry({}, generic_from=None))
    assert bounds.trivial
    assert (bounds.lo, bounds.hi) == (1, 2)


def test_faces_outside_the_progression_drop_the_upper_bound():
    shape = polytope(2, [((1, 0), 1), ((0, 1), 1), ((-1, 0), 1), ((0, -1), 1), (("3/5", "4/5"), 1)])
    bounds = dimension_bounds(shape)
    assert bounds.residual == (4,)
    assert (bounds.lo, bounds.hi) == (Fraction(17, 11), 2)


def test_registry_entries_are_ordered():
    with pytest.raises(ConfigInvalid):
        BoundEntry(Fraction(1), Fraction(1, 2), ("tag",))


def test_polytope_validation():
    with pytest.raises(ConfigInvalid):
        polytope(2, [((1, 1), 1), ((-1, 0), 1), ((0, -1), 1)])
    with pytest.raises(ConfigInvalid):
        polytope(2, [((1, 0), 1), ((0, 1), 1), (("3/5", "4/5"), 1)])
    with pytest.raises(NoHarmonicFamily):
        harmonic_index_extract(polytope(1, [((1,), 1)], bounded=False))


def test_coordinates_and_json():
    assert parse_coordinate("-sqrt(1/2)") == -sp.sqrt(2) / 2
    assert parse_coordinate("3/4") == sp.Rational(3, 4)
    tilted = {"n": 2, "hyperplanes": [
        {"u": [sx], "u_tail_norm_sq": "1/2", "tail_sign": sy, "d": 1}
        for sx in ("sqrt(1/2)", "-sqrt(1/2)") for sy in (1, -1)]}
    bounds = dimension_bounds(polytope_from_json(tilted))
    assert (bounds.lo, bounds.hi) == (Fraction(3, 2), Fraction(3, 2))
    with pytest.raises(ConfigInvalid):
        polytope_from_json({"hyperplanes": []})


def test_triangle_cube_away_from_bad_lines_is_certified():
    family = line_family_setup(TRIANGLE, Cube((Fraction(1, 2), Fraction(5)), Fraction(1, 4)))
    assert len(family.bad_pairs) == 3
    assert family.certified
    assert family.delta is None
    assert family.resample(200) == 0


def test_cube_on_a_bad_line_is_not_certified():
    family = line_family_setup(TRIANGLE, Cube((Fraction(0), Fraction(1)), Fraction(1, 4)))
    assert not family.certified
    assert not family.tail_avoids_diagonal((0, 1))


def test_unequal_distances_give_a_threshold():
    pair = polytope(2, [((1, 0), 1), ((-1, 0), 2)], bounded=False)
    family = line_family_setup(pair, Cube((Fraction(0), Fraction(0)), Fraction(1)))
    assert family.delta == 2
    assert family.certified
    assert family.tail_avoids_diagonal((Fraction(1, 2), 0))


def test_shared_normals_are_degenerate():
    twin = polytope(2, [((1, 0), 1), ((1, 0), 2), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])
    with pytest.raises(DegeneratePolytope):
        line_family_setup(twin, Cube((Fraction(0), Fraction(0)), Fraction(1)))
