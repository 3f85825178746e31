# -*- coding: utf-8 -*-
from fractions import Fraction
import pytest
from modules.errors import EpsilonViolated, NoPrimeFound, TooLarge
from modules.fields import (
    FieldCover, choose_projection_prime, ff_min_cover, ff_translate_cover, field_family, lift_cover, product_cover
)
from modules.patterns import PatternFamily
from modules.solver import Quantity, brute_force_oracle, make_problem


@pytest.mark.parametrize("p, elements, size", [(5, [1], 2), (5, [1, 2], 4), (2, [1], 2)])
def test_minimum_field_covers(p, elements, size):
    cover = ff_min_cover(p, 1, elements)
    assert cover.size == size
    assert cover.certified and cover.verify() and cover.covers_everything()


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("elements", [[1], [1, 2], [1, 2, 3]])
def test_field_minimum_matches_the_oracle(p, elements):
    if p == 3 and 3 in elements:
        pytest.skip("3 vanishes mod 3")
    cover = ff_min_cover(p, 1, elements)
    oracle = brute_force_oracle(make_problem(Quantity.G_FIELD, PatternFamily.of(elements), p))
    assert cover.size == oracle.size <= p


def test_exact_search_is_capped():
    with pytest.raises(TooLarge):
        ff_min_cover(101, 2, [1])


def test_translated_cover_is_a_cover():
    cover = ff_min_cover(7, 1, [1, 2])
    ring = cover.ring
    shifted = FieldCover(7, 1, cover.family, frozenset(ring.add(a, 3) for a in cover.points),
                         {ring.add(x, 3): r for x, r in cover.witnesses.items()})
    assert shifted.verify()


def test_product_cover_squares_the_field_cover():
    cover = ff_min_cover(5, 1, [1, 2])
    square = product_cover(cover, 2)
    assert square.size == 16
    assert len(square.witnesses) == 25
    assert all(all(c != 0 for c in r) for r in square.witnesses.values())
    assert square.verify()
    assert product_cover(cover, 1) is cover


def test_lift_projects_back():
    cover = ff_min_cover(7, 1, [1])
    lifted = lift_cover(cover, Fraction(1, 2))
    assert lifted.round_trip and lifted.bound_holds
    assert len(lifted.points) <= 2 * cover.size * 7
    assert lifted.instance.dump()["basepoints"] == 7


def test_lift_rejects_small_primes():
    with pytest.raises(EpsilonViolated):
        lift_cover(ff_min_cover(5, 1, [1, 2, 3]), Fraction(1, 2))


def test_projection_prime_choice():
    assert choose_projection_prime([22, 26, 3, 3, 5, 7, 9, 4, 6, 8]) == 17
    assert choose_projection_prime({1: 5, 2: 7}) == 3
    with pytest.raises(NoPrimeFound) as caught:
        choose_projection_prime([3, 3])
    assert caught.value.details == {"3": [1, 2]}


def test_translates_spread_one_basepoint():
    partial = FieldCover(5, 1, field_family(5, 1, [1, 2]), frozenset({0, 1}), {4: 1})
    spread = ff_translate_cover(partial)
    assert spread.translates == [0, 1, 2, 3, 4]
    assert spread.cover.covers_everything()
    assert spread.cover.size <= len(spread.translates) * partial.size


def test_complete_cover_needs_no_translates():
    assert ff_translate_cover(ff_min_cover(5, 1, [1, 2])).translates == [0]
