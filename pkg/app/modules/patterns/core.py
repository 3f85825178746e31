# -*- coding: utf-8 -*-
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple
from loguru import logger
from modules.errors import DegeneratePattern, InvalidCover, OutOfRange, RingMismatch
from modules.patterns.family import PatternFamily, PatternInstance, PatternSet
from modules.patterns.ranges import ScaleRange
from modules.patterns.rings import Element, RingContext, RingKind


def instantiate_pattern(x: Element, r: Element, family: PatternFamily) -> PatternSet:
    """The set x + r*U.

    :param x: basepoint.
    :param r: nonzero scale; cyclotomic scales multiply through the ring product.
    :param family: pattern family U.
    """
    instance = PatternInstance(x, r, family)
    points = instance.realize()
    if len(set(points)) != family.k:
        raise DegeneratePattern("pattern points collide", {
            "basepoint": family.ring.dump(instance.basepoint), "scale": family.ring.dump(instance.scale)})
    return PatternSet(family.ring, frozenset(points))


def _check_ring(points: PatternSet, family: PatternFamily):
    if points.ring != family.ring:
        raise RingMismatch(f"point set lives in {points.ring}, family in {family.ring}")


def basepoints_covered(points: PatternSet, family: PatternFamily, scales: ScaleRange) -> Dict[Element, Element]:
    """Every basepoint carrying a pattern inside ``points``, mapped to its smallest witness scale.

    With two or more family elements any pattern inside the set is pinned down by where its first
    two elements land, so unbounded scale domains are enumerated through point pairs.
    """
    _check_ring(points, family)
    ring = family.ring
    found: Dict[Element, Element] = {}

    def offer(x, r):
        if x not in found or r < found[x]:
            found[x] = r

    if family.k == 1:
        if not scales.bounded and not ring.finite:
            raise OutOfRange("a single-element family needs a bounded scale domain")
        (u,) = family.elements
        for b in points:
            for r in ring.scales(scales):
                offer(ring.sub(b, ring.scale(r, u)), r)
        return dict(sorted(found.items()))

    u1, u2 = family.elements[0], family.elements[1]
    for b1 in points:
        for b2 in points:
            if b1 == b2:
                continue
            r = ring.solve_scale(b1, b2, u1, u2)
            if r is None or not ring.in_domain(r, scales):
                continue
            x = ring.sub(b1, ring.scale(r, u1))
            if all(ring.add(x, ring.scale(r, u)) in points.points for u in family.elements[2:]):
                offer(x, r)
    return dict(sorted(found.items()))


def verify_cover(points: PatternSet, family: PatternFamily,
                 pairs: Iterable[Tuple[Element, Element]]) -> List[Tuple[Element, Element]]:
    """Return the (basepoint, scale) pairs whose pattern is not inside ``points``."""
    _check_ring(points, family)
    ring = family.ring
    failures = []
    for x, r in pairs:
        if ring.is_zero(r) or not all(ring.add(x, ring.scale(r, u)) in points.points for u in family):
            failures.append((x, r))
    return failures


def require_cover(points: PatternSet, family: PatternFamily, pairs: Iterable[Tuple[Element, Element]]):
    failures = verify_cover(points, family, pairs)
    if failures:
        ring = family.ring
        raise InvalidCover(f"{len(failures)} witness patterns are not contained in the cover",
                           {"failures": [[ring.dump(x), ring.dump(r)] for x, r in failures[:20]]})


def normalize_to_integers(family: PatternFamily) -> Tuple[int, PatternFamily]:
    """Clear denominators: the least c with c*U integral, and c*U over the integers."""
    if family.ring.kind not in (RingKind.RATIONALS, RingKind.INTEGERS):
        raise RingMismatch(f"cannot clear denominators over {family.ring}")
    c = math.lcm(*(Fraction(u).denominator for u in family.elements))
    scaled = [int(Fraction(u) * c) for u in family.elements]
    logger.debug(f"normalized {family} by {c}")
    return c, PatternFamily.of(scaled, RingContext.integers(), label=family.label)


def translate_witnesses(witnesses: Mapping[Element, Element], ring: RingContext, shift: Element) -> Dict:
    return {ring.add(x, shift): r for x, r in witnesses.items()}
