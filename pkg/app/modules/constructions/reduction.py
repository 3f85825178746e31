# -*- coding: utf-8 -*-
"""Folding a cover with N scattered basepoints into a window {0, ..., N-1}.

phi(x) = floor(N {theta x}) is almost additive: phi(x + y) - phi(x) - phi(y) lies in
{0, 1, -N, 1 - N}. Iterating along a pattern a + r*u shows phi(a) + u*phi(r) sits within
-{0..u} + N{0..u} of phi(a + r*u), so thickening phi(A) by those offsets keeps every pattern
whose image scale phi(r) is nonzero.
"""
import math
from collections import Counter
from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional
import numpy as np
from loguru import logger
from modules.errors import ConfigInvalid, InvalidCover, SeedExhausted
from modules.patterns import PatternFamily, PatternSet, RingContext, require_cover
from modules.constructions.seeds import DEFAULT_SEED, stream
from modules.constructions.translates import random_translate_cover

THETA_BITS = 64
MAX_TRIES = 256


@dataclass(frozen=True)
class PhiTheta:
    theta: Fraction
    n: int

    def __call__(self, x: int) -> int:
        return math.floor(self.n * ((self.theta * x) % 1))

    def defect(self, x: int, y: int) -> int:
        return self(x + y) - self(x) - self(y)


def sample_theta(rng: np.random.Generator) -> Fraction:
    """A dyadic theta = m / 2^64 with m uniform in [1, 2^64)."""
    m = int(rng.integers(1, 2 ** THETA_BITS, dtype=np.uint64))
    return Fraction(m, 2 ** THETA_BITS)


@dataclass(frozen=True)
class Reduction:
    phi: PhiTheta
    tries: int
    collisions: int
    points: FrozenSet[int]
    witnesses: Dict[int, int]
    translated: Optional[FrozenSet[int]] = None
    translated_witnesses: Optional[Dict[int, int]] = None

    def dump(self) -> dict:
        payload = {"theta": str(self.phi.theta), "n": self.phi.n, "tries": self.tries, "collisions": self.collisions,
                   "A3": sorted(self.points), "witnesses": [[a, r] for a, r in sorted(self.witnesses.items())],
                   "surviving": len(self.witnesses)}
        if self.translated is not None:
            payload["A1"] = sorted(self.translated)
            payload["translated_witnesses"] = [[a, r] for a, r in sorted(self.translated_witnesses.items())]
        return payload


def _collisions(images: Iterable[int]) -> int:
    return sum(count * (count - 1) // 2 for count in Counter(images).values())


def phi_theta_reduce(points: Iterable[int], witnesses: Mapping[int, int], family: PatternFamily,
                     seed: int = DEFAULT_SEED, theta: Optional[Fraction] = None, translate: bool = False,
                     max_tries: int = MAX_TRIES) -> Reduction:
    """Fold a cover with N basepoints into {0..N-1}, keeping at least N/3 of them.

    :param witnesses: basepoint -> scale for every one of the N basepoints.
    :param family: positive integer family U.
    :param theta: fixed theta instead of seeded sampling.
    :param translate: also cover every basepoint of {0..N-1} with translates of the survivors.
    """
    if not family.positive_integers:
        raise ConfigInvalid(f"the reduction needs a positive integer family, got {family}")
    ring = RingContext.integers()
    points = frozenset(points)
    require_cover(PatternSet.of(ring, points), family, witnesses.items())
    n = len(witnesses)
    if n < 1:
        raise ConfigInvalid("the reduction needs at least one basepoint")
    top = max(family.elements)
    need = math.ceil(n / 3)
    rng = stream(seed, "phi-theta")
    for attempt in range(1, max_tries + 1):
        phi = PhiTheta(theta if theta is not None else sample_theta(rng), n)
        images = {a: phi(a) for a in sorted(witnesses)}
        collisions = _collisions(images.values())
        survivors = {}
        for a, image in images.items():
            scale = phi(witnesses[a])
            if scale != 0 and image not in survivors:
                survivors[image] = scale
        if collisions <= n - 1 and len(survivors) >= need:
            break
        logger.debug(f"theta {phi.theta} rejected: {collisions} collisions, {len(survivors)} survivors")
        if theta is not None:
            raise SeedExhausted(f"fixed theta {theta} does not separate the basepoints",
                                {"collisions": collisions, "survivors": len(survivors)})
    else:
        raise SeedExhausted(f"no good theta in {max_tries} tries", {"seed": seed, "n": n})

    offsets = {-i + j * n for i in range(top + 1) for j in range(top + 1)}
    folded = frozenset(phi(x) + offset for x in points for offset in offsets)
    if len(folded) > (top + 1) ** 2 * len(points):
        raise InvalidCover("folded set exceeds its size bound")
    require_cover(PatternSet.of(ring, folded), family, survivors.items())
    reduction = Reduction(phi, attempt, collisions, folded, dict(sorted(survivors.items())))
    logger.info(f"folded {n} basepoints into {len(survivors)} survivors after {attempt} tries")
    if not translate:
        return reduction

    cover = random_translate_cover([image + 1 for image in survivors], n, seed)
    spread = frozenset(x + t for x in folded for t in cover.translates)
    moved = {}
    for target in range(n):
        for t in cover.translates:
            if target - t in survivors:
                moved[target] = survivors[target - t]
                break
    require_cover(PatternSet.of(ring, spread), family, moved.items())
    return Reduction(phi, attempt, collisions, folded, reduction.witnesses, spread, moved)
