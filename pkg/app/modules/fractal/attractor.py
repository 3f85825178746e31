# -*- coding: utf-8 -*-
import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import numpy as np
from loguru import logger
from modules.errors import ConfigInvalid, ResolutionExceeded, TooLarge
from modules.fractal.digits import Digit, DigitSystem

TRUNCATION_CAP = 10_000_000
MORAN_TOLERANCE = 1e-12


def moran_dimension(ratios: Sequence, ambient: int = 1) -> float:
    """The s >= 0 with sum c_i^s = 1.

    Equal ratios have the closed form log m / log(1/c); otherwise bisection on [0, ambient + 1],
    widened until it brackets the root.
    """
    ratios = [Fraction(c) for c in ratios]
    if not ratios:
        raise ConfigInvalid("Moran equation needs at least one ratio")
    if any(not 0 < c < 1 for c in ratios):
        raise ConfigInvalid("similarity ratios must lie in (0, 1)")
    if len(set(ratios)) == 1:
        return math.log(len(ratios)) / math.log(1 / float(ratios[0]))
    values = [float(c) for c in ratios]

    def excess(s: float) -> float:
        return sum(c ** s for c in values) - 1.0

    lo, hi = 0.0, float(ambient + 1)
    while excess(hi) > 0:
        hi *= 2
    while hi - lo > MORAN_TOLERANCE:
        mid = (lo + hi) / 2
        if excess(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class AttractorTruncation:
    """Depth-d points sum_{m<d} a_m N^-(m+1), stored as integer numerators over N^depth."""
    system: DigitSystem
    numerators: FrozenSet[Digit]

    @property
    def denominator(self) -> int:
        return self.system.base ** self.system.depth

    @property
    def points(self) -> List[Tuple[Fraction, ...]]:
        return [tuple(Fraction(c, self.denominator) for c in point) for point in sorted(self.numerators)]

    def __len__(self) -> int:
        return len(self.numerators)

    def __contains__(self, point) -> bool:
        if not isinstance(point, tuple):
            point = (point,)
        scaled = tuple(Fraction(c) * self.denominator for c in point)
        if any(c.denominator != 1 for c in scaled):
            return False
        return tuple(int(c) for c in scaled) in self.numerators


def evaluate_string(system: DigitSystem, string: Sequence[Digit]) -> Digit:
    value = [0] * system.dim
    for digit in string:
        value = [v * system.base + c for v, c in zip(value, digit)]
    return tuple(value)


def build_truncation(system: DigitSystem) -> AttractorTruncation:
    """Every depth-length digit string of the system, evaluated exactly."""
    count = len(system.digits) ** system.depth
    if count > TRUNCATION_CAP:
        raise TooLarge(f"truncation would enumerate {count} digit strings, cap is {TRUNCATION_CAP}")
    level = {(0,) * system.dim}
    for _ in range(system.depth):
        level = {tuple(v * system.base + c for v, c in zip(value, digit))
                 for value in level for digit in system.digits}
    if not system.carries and len(level) != count:
        raise AssertionError("digit strings without carries must evaluate injectively")
    logger.debug(f"truncation of depth {system.depth}: {len(level)} points from {count} strings")
    return AttractorTruncation(system, frozenset(level))


@dataclass(frozen=True)
class BoxCount:
    counts: Dict[int, int]
    slope: float

    def rows(self) -> List[dict]:
        return [{"j": j, "count": count} for j, count in sorted(self.counts.items())]

    def dump(self) -> dict:
        return {"slope": self.slope, "counts": self.rows()}


def box_counts(truncation: AttractorTruncation, levels: Iterable[int]) -> Dict[int, int]:
    """Occupied boxes [i/N^j, (i+1)/N^j) per coordinate, for each level j."""
    system = truncation.system
    counts = {}
    for j in sorted(set(levels)):
        if not 0 <= j <= system.depth:
            raise ResolutionExceeded(f"scale N^-{j} is finer than the truncation depth {system.depth}")
        shrink = system.base ** (system.depth - j)
        counts[j] = len({tuple(c // shrink for c in point) for point in truncation.numerators})
    return counts


def box_count_estimate(truncation: AttractorTruncation, levels: Optional[Iterable[int]] = None) -> BoxCount:
    """Least-squares slope of log N(eps) against log(1/eps) over eps = N^-j."""
    levels = list(range(1, truncation.system.depth + 1)) if levels is None else list(levels)
    counts = box_counts(truncation, levels)
    if len(counts) < 2:
        raise ConfigInvalid("a slope needs at least two scales")
    xs = np.array([j * math.log(truncation.system.base) for j in counts], dtype=float)
    ys = np.array([math.log(count) for count in counts.values()], dtype=float)
    slope = float(np.polyfit(xs, ys, 1)[0])
    return BoxCount(counts, slope)


def attractor_dimension(system: DigitSystem) -> float:
    """Moran value with |A| maps of ratio 1/N; exact when the open set condition holds."""
    return moran_dimension([Fraction(1, system.base)] * len(system.digits), system.dim)
