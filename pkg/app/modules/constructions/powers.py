# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Dict
from modules.errors import ConfigInvalid
from modules.patterns import PatternFamily, PatternSet, RingContext, ScaleRange, basepoints_covered


@dataclass(frozen=True)
class PowersCover:
    m: int
    points: PatternSet
    covered: Dict[int, int]

    @property
    def expected(self) -> int:
        return self.m * self.m - 2 * self.m + 2

    def dump(self) -> dict:
        return {"m": self.m, "B": self.points.dump(), "covered": sorted(self.covered),
                "witnesses": [[x, r] for x, r in self.covered.items()], "count": len(self.covered)}


def powers_of_two_cover(m: int) -> PowersCover:
    """B = {1, 2, ..., 2^(m-1)} and the basepoints carrying a {1, 2} pattern in it.

    Ordered pairs (2^i, 2^j) give basepoint 2^(i+1) - 2^j; the only coincidences are j = i + 1,
    all landing on 0, so m^2 - 2m + 2 basepoints are covered.
    """
    if m < 2:
        raise ConfigInvalid(f"powers of two cover needs m >= 2, got {m}")
    ring = RingContext.integers()
    family = PatternFamily.of([1, 2], ring, "{1,2}")
    points = PatternSet.of(ring, [2 ** i for i in range(m)])
    covered = basepoints_covered(points, family, ScaleRange.nonzero())
    return PowersCover(m, points, covered)
