# -*- coding: utf-8 -*-
import math
from fractions import Fraction
import pytest
from hypothesis import given, settings, strategies as st
from modules.errors import ConfigInvalid, MissingWitness, ResolutionExceeded
from modules.fractal import (
    DigitSystem, ap_in_attractor_check, attractor_dimension, box_count_estimate, box_counts, build_truncation,
    digit_system_from_cover, digits_of, discretize_cover, moran_dimension, open_set_condition
)

CANTOR = DigitSystem.of(5, [0, 2, 4], depth=6)


def test_moran_dimension():
    assert moran_dimension([Fraction(1, 5)] * 3) == pytest.approx(math.log(3) / math.log(5))
    assert moran_dimension([Fraction(1, 2)]) == 0
    golden = math.log2(2 / (math.sqrt(5) - 1))
    assert moran_dimension([Fraction(1, 2), Fraction(1, 4)]) == pytest.approx(golden, abs=1e-10)
    with pytest.raises(ConfigInvalid):
        moran_dimension([Fraction(3, 2)])


def test_truncation_sizes():
    assert len(build_truncation(CANTOR.deeper(2))) == 9
    assert sorted(build_truncation(CANTOR.deeper(1)).numerators) == [(0,), (2,), (4,)]
    full = build_truncation(DigitSystem.of(3, [0, 1, 2], depth=3))
    assert len(full) == 27
    assert box_counts(full, [3]) == {3: 27}


def test_truncation_membership_is_exact():
    truncation = build_truncation(CANTOR.deeper(2))
    assert Fraction(2, 5) + Fraction(4, 25) in truncation
    assert Fraction(1, 5) not in truncation


def test_box_count_slope_matches_the_moran_value():
    estimate = box_count_estimate(build_truncation(CANTOR))
    assert abs(estimate.slope - attractor_dimension(CANTOR)) < 0.05
    assert [row["count"] for row in estimate.rows()] == [3 ** j for j in range(1, 7)]


def test_interval_and_point_slopes():
    interval = box_count_estimate(build_truncation(DigitSystem.of(4, range(4), depth=5)))
    assert interval.slope == pytest.approx(1.0)
    point = box_count_estimate(build_truncation(DigitSystem.of(4, [1], depth=5)))
    assert point.slope == pytest.approx(0.0)


def test_scales_beyond_the_truncation():
    with pytest.raises(ResolutionExceeded):
        box_counts(build_truncation(CANTOR.deeper(2)), [3])


@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_box_counts_converge_for_equal_ratio_systems(data):
    base = data.draw(st.integers(2, 7))
    digits = data.draw(st.lists(st.integers(0, base - 1), min_size=1, max_size=base, unique=True))
    system = DigitSystem.of(base, digits, depth=6)
    truncation = build_truncation(system)
    assert len(truncation) == len(digits) ** 6
    assert abs(box_count_estimate(truncation).slope - attractor_dimension(system)) <= 0.05


def test_open_set_condition():
    assert open_set_condition(CANTOR)
    assert not open_set_condition(digit_system_from_cover(range(6), 3, 2))


def test_digits_of_strings_and_rationals():
    assert digits_of("0.12", 3, 2) == [(1,), (2,)]
    assert digits_of(Fraction(5, 9), 3, 2) == [(1,), (2,)]
    assert digits_of((Fraction(1, 3), Fraction(2, 3)), 3, 1) == [(1, 2)]
    with pytest.raises(ResolutionExceeded):
        digits_of("0.121", 3, 2)


def test_progressions_inside_the_attractor():
    system = digit_system_from_cover(range(6), 3, 2)
    witnesses = {0: 0, 1: 0, 2: 0}
    check = ap_in_attractor_check(system, witnesses, "0.12", 2)
    assert check.holds and check.carries
    assert check.strings == [((1,), (2,)), ((2,), (4,))]
    assert ap_in_attractor_check(system, witnesses, 0, 2).holds
    assert ap_in_attractor_check(system, witnesses, "0.21", 1).holds


def test_zero_digit_witness_is_synthesized():
    system = digit_system_from_cover(range(6), 3, 2)
    check = ap_in_attractor_check(system, {1: 0, 2: 0}, "0.1", 2)
    assert check.holds and check.synthesized


def test_missing_difference_digit():
    system = digit_system_from_cover(range(6), 3, 2)
    with pytest.raises(MissingWitness):
        ap_in_attractor_check(system, {0: 0}, "0.12", 2)


def test_discretize_uses_right_corners():
    assert discretize_cover([Fraction(3, 10), Fraction(7, 10)], 10).points == frozenset({(3,), (7,)})
    assert discretize_cover([2, 5], 1).points == frozenset({(2,), (5,)})
    assert discretize_cover([Fraction(1, 10), Fraction(1, 20)], 10).points == frozenset({(1,)})


@given(numerator=st.integers(-200, 200), denominator=st.integers(1, 40), q=st.integers(1, 30))
def test_discretize_cells_are_closed_on_the_right(numerator, denominator, q):
    x = Fraction(numerator, denominator)
    (i,), = discretize_cover([x], q).points
    assert Fraction(i - 1, q) < x <= Fraction(i, q)


def test_discretizing_a_truncation_recovers_its_digit_strings():
    truncation = build_truncation(CANTOR.deeper(3))
    image = discretize_cover(truncation.points, 5 ** 3)
    assert image.points == truncation.numerators


def test_discretized_progressions():
    result = discretize_cover([0, Fraction(1, 2), 1], 4, witnesses={Fraction(1, 2): 0}, k=3)
    assert result.progressions == {(2,): (0,)}
    assert result.progression_set == frozenset({(0,), (2,), (4,)})
