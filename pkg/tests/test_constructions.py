# -*- coding: utf-8 -*-
from fractions import Fraction
import pytest
from hypothesis import given, settings, strategies as st
from modules.constructions import (
    LinearEncoding, PhiTheta, ProjectionSystem, amplify, encode_nd_to_1d, encode_progression_cover,
    phi_theta_reduce, powers_of_two_cover, project, random_translate_cover, stream, tower
)
from modules.errors import ConfigInvalid, HypothesisFails, InvalidCover, OutOfRange
from modules.patterns import PatternFamily

TRIANGLE = [(0, 0), (2, 1), (1, 2)]


@pytest.mark.parametrize("m", [2, 3, 5, 8])
def test_powers_of_two_cover_count(m):
    cover = powers_of_two_cover(m)
    assert len(cover.covered) == cover.expected == m * m - 2 * m + 2


def test_powers_of_two_basepoints():
    assert sorted(powers_of_two_cover(3).covered) == [-2, 0, 3, 6, 7]
    with pytest.raises(ConfigInvalid):
        powers_of_two_cover(1)


def test_tower_first_step():
    first, second = tower(2, 2)
    assert first.points == (1, 2) and first.witnesses == {0: 1}
    assert second.points == (1, 2, 4, 5)
    assert second.basepoints == (-2, -1, 0, 3)
    assert second.witnesses[-1] == 3
    assert second.t_history == (3,)


@pytest.mark.parametrize("k, levels", [(2, 5), (3, 3), (4, 2)])
def test_tower_sizes(k, levels):
    states = tower(k, levels)
    for state in states:
        state.verify()
        assert len(state.points) == k ** state.level
        assert len(state.witnesses) == state.level * k ** (state.level - 1)
    assert states[-1].dump()["stats"] == {"B": k ** levels, "S": levels * k ** (levels - 1)}


def test_singleton_translates_fill_the_window():
    cover = random_translate_cover([1], 4)
    assert cover.translates == [0, 1, 2, 3]


@settings(max_examples=20, deadline=None)
@given(shape=st.lists(st.integers(0, 6), min_size=1, max_size=4, unique=True), x=st.integers(1, 60),
       randomized=st.booleans(), seed=st.integers(0, 1000))
def test_translates_cover_and_respect_the_bound(shape, x, randomized, seed):
    cover = random_translate_cover(shape, x, seed, randomized)
    covered = {s + t for s in shape for t in cover.translates}
    assert set(range(1, x + 1)) <= covered
    assert cover.size <= cover.bound


def test_random_translates_are_reproducible():
    first = random_translate_cover([0, 1, 3], 200, seed=7, randomized=True)
    again = random_translate_cover([0, 1, 3], 200, seed=7, randomized=True)
    assert first.translates == again.translates


def test_named_streams_are_independent():
    assert stream(1, "a").integers(0, 2 ** 32) == stream(1, "a").integers(0, 2 ** 32)
    assert stream(1, "a").integers(0, 2 ** 32) != stream(1, "b").integers(0, 2 ** 32)


def test_projections_of_the_triangle():
    assert project(TRIANGLE, Fraction(-1)) == frozenset({0, 1, -1})
    assert project(TRIANGLE, Fraction(1)) == frozenset({0, 3})
    assert project(TRIANGLE, None) == frozenset({0, 1, 2})


def least_power(m, epsilon):
    for n in range(1, 200):
        try:
            return amplify(ProjectionSystem.of(TRIANGLE, [1]), epsilon, m, n=n).n
        except HypothesisFails:
            continue
    raise AssertionError("no tensor power reaches the margin")


@pytest.mark.parametrize("m, expected", [(2, 12), (10, 40)])
def test_amplify_takes_the_least_power(m, expected):
    result = amplify(ProjectionSystem.of(TRIANGLE, [1]), Fraction(1, 2), m)
    assert result.n == expected == least_power(m, Fraction(1, 2))
    assert result.size_of(Fraction(-1)) == 3 ** expected
    assert result.inequality_holds()
    assert "points" not in result.dump()


@pytest.mark.parametrize("m, expected", [(2, 2), (10, 6)])
def test_amplified_projections_match_their_sizes(m, expected):
    result = amplify(ProjectionSystem.of(TRIANGLE, [1]), 0, m)
    assert result.n == expected == least_power(m, 0)
    points = result.points()
    assert len(points) == result.size == 3 ** expected
    for slope in (Fraction(1), Fraction(-1), Fraction(0), None):
        assert len(project(points, slope)) == result.size_of(slope)


def test_amplified_points_are_distinct():
    result = amplify(ProjectionSystem.of(TRIANGLE, [1]), 0, 2, n=3)
    points = result.points()
    assert len(points) == 27
    assert len(project(points, Fraction(-1))) == 27
    assert len(project(points, Fraction(1))) == 8


def test_amplify_needs_the_hypothesis():
    with pytest.raises(HypothesisFails):
        amplify(ProjectionSystem.of(TRIANGLE, [1]), 1, 2)
    with pytest.raises(ConfigInvalid):
        ProjectionSystem.of(TRIANGLE, [-1])


def test_linear_encoding():
    encoding = LinearEncoding(2, 3, 2)
    assert encoding.encode((1, 2)) == 7260
    assert encoding.decode(7260) == (1, 2)
    assert len(encode_nd_to_1d([(x, y) for x in range(4) for y in range(4)], 2, 3)) == 16
    with pytest.raises(OutOfRange):
        encoding.encode((30, 0))


def test_progression_cover_survives_encoding():
    points = [(0, 0), (1, 1), (2, 2), (1, 0), (2, 0)]
    witnesses = {(1, 1): (0, 0), (1, 0): (0, 0)}
    cover = encode_progression_cover(points, witnesses, 2, 3)
    assert cover.verify()
    assert len(cover.points) == len(points)
    with pytest.raises(InvalidCover):
        encode_progression_cover(points, {(0, 1): (0, 0)}, 2, 3)


def test_phi_theta_is_almost_additive():
    phi = PhiTheta(Fraction(12345, 2 ** 16), 17)
    for x in range(-20, 20):
        for y in range(-20, 20):
            assert phi.defect(x, y) in (0, 1, -17, -16)


def test_phi_theta_reduction_keeps_a_third():
    family = PatternFamily.of([1, 2])
    witnesses = {10 * i: 3 + i for i in range(9)}
    points = {x + r * u for x, r in witnesses.items() for u in (1, 2)}
    reduction = phi_theta_reduce(points, witnesses, family, seed=3)
    assert len(reduction.witnesses) >= 3
    assert all(0 <= a < 9 for a in reduction.witnesses)
    assert len(reduction.points) <= 9 * len(points)
    translated = phi_theta_reduce(points, witnesses, family, seed=3, translate=True)
    assert set(translated.translated_witnesses) == set(range(9))
