# -*- coding: utf-8 -*-
"""Lifting field covers to integer pattern sets.

Residues lift to {0, ..., p-1} coordinatewise; each lifted pattern psi(x) + psi(r)*u reduces to a
pattern of the field cover, so the lift projects back inside it. A linear encoding then flattens
Z^n into Z without breaking patterns, giving an integer instance with p^n basepoints.
"""
from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple
from loguru import logger
from modules.errors import EpsilonViolated, InvalidCover
from modules.constructions import LinearEncoding
from modules.patterns import PatternFamily, PatternSet, RingContext, require_cover
from modules.fields.cover import FieldCover

Vector = Tuple[int, ...]


def _lift(value) -> Vector:
    return tuple(value) if isinstance(value, tuple) else (value,)


@dataclass(frozen=True)
class IntegerInstance:
    points: FrozenSet[int]
    witnesses: Dict[int, int]
    base: int

    def dump(self) -> dict:
        return {"points": sorted(self.points), "witnesses": [[x, r] for x, r in sorted(self.witnesses.items())],
                "base": self.base, "basepoints": len(self.witnesses)}


@dataclass(frozen=True)
class LiftResult:
    epsilon: Fraction
    points: FrozenSet[Vector]
    witnesses: Dict[Vector, Vector]
    instance: IntegerInstance
    bound_holds: bool
    round_trip: bool

    def dump(self) -> dict:
        return {"epsilon": str(self.epsilon), "size": len(self.points), "bound_holds": self.bound_holds,
                "round_trip": self.round_trip, "A2": [list(point) for point in sorted(self.points)],
                "instance": self.instance.dump()}


def field_to_integer_instance(points, witnesses: Dict[Vector, Vector], family: PatternFamily, p: int,
                              dim: int) -> IntegerInstance:
    """Flatten a lifted cover of Z^n into Z with base 10kp, enlarging the base until it is injective."""
    top = max((abs(c) for point in points for c in point), default=0)
    bound = p
    while top >= 5 * family.k * bound:
        logger.warning(f"encoding base {10 * family.k * bound} too small for coordinates up to {top}, enlarging")
        bound *= 10
    encoding = LinearEncoding(family.k, bound, dim)
    image = frozenset(encoding.encode(point) for point in points)
    if len(image) != len(points):
        raise InvalidCover("flattening map is not injective on the lifted set")

    def linear(vector):
        return sum(encoding.base ** (i + 1) * c for i, c in enumerate(vector))

    mapped = {linear(x): linear(r) for x, r in witnesses.items()}
    integers = PatternFamily.of(list(family.elements), RingContext.integers())
    require_cover(PatternSet.of(RingContext.integers(), image), integers, mapped.items())
    return IntegerInstance(image, mapped, encoding.base)


def lift_cover(cover: FieldCover, epsilon) -> LiftResult:
    """A2 = {psi(x) + psi(r(x))*u} over Z^n, with |A2| <= (2 p^eps)^n |A1| checked in integers.

    :param epsilon: rational exponent with max|u| < p^eps.
    """
    epsilon = Fraction(epsilon)
    a, b = epsilon.numerator, epsilon.denominator
    top = max(abs(u) for u in cover.family)
    if epsilon <= 0 or top ** b >= cover.p ** a:
        raise EpsilonViolated(f"need max|u| < p^eps, got max|u|={top}, p={cover.p}, eps={epsilon}",
                              {"p": cover.p, "epsilon": str(epsilon), "max_u": top})
    lifted_witnesses = {_lift(x): _lift(r) for x, r in cover.witnesses.items()}
    points = frozenset(tuple(xc + rc * u for xc, rc in zip(x, r))
                       for x, r in lifted_witnesses.items() for u in cover.family)
    size, base = len(points), len(cover.points)
    bound_holds = size ** b <= 2 ** (cover.n * b) * cover.p ** (cover.n * a) * base ** b
    members = {_lift(point) for point in cover.points}
    round_trip = all(tuple(c % cover.p for c in point) in members for point in points)
    if not round_trip:
        raise InvalidCover("lifted set does not project back into the field cover")
    instance = field_to_integer_instance(points, lifted_witnesses, cover.family, cover.p, cover.n)
    logger.debug(f"lifted {base} field points to {size} integer points, {len(instance.witnesses)} basepoints")
    return LiftResult(epsilon, points, lifted_witnesses, instance, bound_holds, round_trip)
