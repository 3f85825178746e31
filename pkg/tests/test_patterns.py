# -*- coding: utf-8 -*-
from fractions import Fraction
import pytest
from hypothesis import given, settings, strategies as st
from modules.errors import DegeneratePattern, DuplicateElements, InvalidCover, RingMismatch, ZeroScale
from modules.patterns import (
    IntRange, PatternFamily, PatternSet, RingContext, ScaleRange, arithmetic_to_harmonic, basepoints_covered,
    factorial_embed_check, harmonic_to_arithmetic, instantiate_pattern, normalize_to_integers, parse_family,
    verify_cover
)


def test_instantiate_over_a_field_reduces_points():
    family = PatternFamily.of([1, 2], RingContext.field(7))
    assert instantiate_pattern(3, 5, family).sorted() == (1, 6)


def test_instantiate_over_gaussian_integers_multiplies_in_the_ring():
    ring = RingContext.cyclotomic(4)
    family = PatternFamily.of([(1, 0), (0, 1)], ring, strict_coordinates=False)
    # (1, 1) * i = (-1, 1)
    points = instantiate_pattern((0, 0), (1, 1), family)
    assert set(points) == {(1, 1), (-1, 1)}


def test_zero_scale_is_rejected():
    with pytest.raises(ZeroScale):
        instantiate_pattern(3, 0, PatternFamily.of([1, 2]))


def test_family_validation():
    with pytest.raises(DuplicateElements):
        PatternFamily.of([1, 1])
    with pytest.raises(DegeneratePattern):
        PatternFamily.of([0, 1])
    with pytest.raises(DuplicateElements):
        PatternFamily.of([1, 8], RingContext.field(7))
    assert PatternFamily.of([3, 1, 2]).elements == (1, 2, 3)


def test_pattern_set_ring_mismatch():
    points = PatternSet.of(RingContext.rationals(), [1, 2])
    with pytest.raises(RingMismatch):
        verify_cover(points, PatternFamily.of([1, 2]), [(0, 1)])


def test_basepoints_covered_by_powers_of_two():
    points = PatternSet.of(RingContext.integers(), [1, 2, 4])
    covered = basepoints_covered(points, PatternFamily.of([1, 2]), ScaleRange.nonzero())
    assert set(covered) == {-2, 0, 3, 6, 7}
    # smallest witness scale wins for the shared basepoint 0
    assert covered[0] == 1


def test_single_element_family_needs_bounded_scales():
    points = PatternSet.of(RingContext.integers(), [5])
    covered = basepoints_covered(points, PatternFamily.of([1]), ScaleRange(1, 3))
    assert set(covered) == {2, 3, 4}


def test_verify_cover_reports_failures():
    points = PatternSet.of(RingContext.integers(), [2, 3, 4])
    family = PatternFamily.of([1, 2])
    assert not verify_cover(points, family, [(1, 1), (2, 1), (0, 2)])
    assert verify_cover(points, family, [(1, 1), (5, 1)]) == [(5, 1)]


def test_normalize_to_integers_clears_denominators():
    c, family = normalize_to_integers(parse_family("1/2,1/3"))
    assert c == 6
    assert family.elements == (2, 3)


def test_parse_family_forms():
    assert parse_family("[3]").elements == (1, 2, 3)
    assert parse_family("1/[3]").elements == (Fraction(1, 3), Fraction(1, 2), Fraction(1))
    assert parse_family("{1,2}").elements == (1, 2)
    assert parse_family('{"elements": [1, "1/2"], "ring": "rationals"}').elements == (Fraction(1, 2), Fraction(1))


def test_ranges():
    assert list(ScaleRange(-2, 2)) == [-2, -1, 1, 2]
    assert 0 not in ScaleRange(-2, 2)
    assert list(ScaleRange(-2, 2, positive=True)) == [1, 2]
    assert len(IntRange.parse("-3..3")) == 7


def test_harmonic_to_arithmetic_scales_each_slice():
    result = harmonic_to_arithmetic([3, Fraction(5, 2)], {2: 1}, 2)
    assert result.points == frozenset({3, 5})
    assert not result.verify()


def test_harmonic_to_arithmetic_rejects_foreign_witnesses():
    with pytest.raises(InvalidCover):
        harmonic_to_arithmetic([3], {2: 1}, 2)


def test_harmonic_basepoint_zero_is_dropped():
    result = harmonic_to_arithmetic([1, Fraction(1, 2), 3, Fraction(5, 2)], {0: 1, 2: 1}, 2)
    assert result.dropped == [0]
    assert set(result.witnesses) == {2}


def test_factorial_embedding():
    assert factorial_embed_check(0, 1, 3)
    assert factorial_embed_check(5, -2, 4)


@settings(max_examples=40, deadline=None)
@given(k=st.integers(1, 4), basepoints=st.lists(st.integers(1, 20), min_size=1, max_size=4, unique=True),
       scale=st.integers(1, 6))
def test_transfer_there_and_back_stays_valid(k, basepoints, scale):
    witnesses = {Fraction(x): Fraction(scale) for x in basepoints}
    points = {x + r / i for x, r in witnesses.items() for i in range(1, k + 1)}
    forward = harmonic_to_arithmetic(points, witnesses, k)
    assert len(forward.points) <= k * len(points)
    back = arithmetic_to_harmonic(forward.points, forward.witnesses, k)
    assert not back.verify()
    assert set(back.witnesses) == set(witnesses)
    assert len(back.points) <= k * k * len(points)
