# -*- coding: utf-8 -*-
"""Planar sets seen through projections x + r*y, and their amplification by tensor powers.

A slope ``None`` stands for infinity, where the projection keeps the second coordinate.
The slope -1 is the distinguished projection every hypothesis compares against.
"""
import itertools
import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple
from loguru import logger
from modules.errors import ConfigInvalid, HypothesisFails, TooLarge

Point = Tuple[int, int]
Slope = Optional[Fraction]
DISTINGUISHED = Fraction(-1)
MATERIALIZE_CAP = 100_000
COLLISION_CAP = 2_000_000


def parse_slope(value: Any) -> Slope:
    if value is None or (isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "oo", "∞")):
        return None
    try:
        return Fraction(value) if not isinstance(value, str) else Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as ex:
        raise ConfigInvalid(f"malformed slope {value!r}") from ex


def slope_text(slope: Slope) -> str:
    return "inf" if slope is None else str(slope)


def project_point(point: Point, slope: Slope):
    x, y = point
    if slope is None:
        return y
    value = x + slope * y
    return value.numerator if isinstance(value, Fraction) and value.denominator == 1 else value


def project(points: Iterable[Point], slope: Slope) -> FrozenSet:
    """pi_r(A) = {x + r*y}, with x + inf*y = y."""
    return frozenset(project_point(point, slope) for point in points)


@dataclass(frozen=True)
class ProjectionSystem:
    points: FrozenSet[Point]
    slopes: Tuple[Slope, ...]

    def __post_init__(self):
        if not self.points:
            raise ConfigInvalid("projection system needs a nonempty point set")
        if DISTINGUISHED in self.slopes:
            raise ConfigInvalid("slope -1 is reserved for the distinguished projection")
        if len(set(self.slopes)) != len(self.slopes):
            raise ConfigInvalid("projection slopes must be distinct")

    @classmethod
    def of(cls, points: Iterable[Sequence[int]], slopes: Iterable[Any]) -> "ProjectionSystem":
        return cls(frozenset((int(x), int(y)) for x, y in points), tuple(parse_slope(s) for s in slopes))

    def sizes(self) -> Dict[str, int]:
        sizes = {slope_text(slope): len(project(self.points, slope)) for slope in self.slopes}
        sizes[slope_text(DISTINGUISHED)] = len(project(self.points, DISTINGUISHED))
        return sizes

    def dump(self) -> dict:
        return {"points": [list(point) for point in sorted(self.points)],
                "slopes": [slope_text(slope) for slope in self.slopes]}


def projection_system_from_json(payload: dict) -> ProjectionSystem:
    if not isinstance(payload, dict) or "points" not in payload:
        raise ConfigInvalid("projection system JSON needs 'points' and 'slopes'")
    return ProjectionSystem.of(payload["points"], payload.get("slopes", []))


def tensor_power(points: Iterable[Point], n: int) -> Iterator[Tuple[Point, ...]]:
    """B^(+n): ordered n-tuples of points of B."""
    return itertools.product(sorted(points), repeat=n)


def _collapse(points: Iterable[Tuple[int, int]], t: int) -> Point:
    x, y = 0, 0
    for px, py in points:
        x, y = x * t + px, y * t + py
    return x, y


def _integral_digits(points: FrozenSet[Point], slope: Slope) -> List[int]:
    values = [Fraction(value) for value in project(points, slope)]
    scale = math.lcm(*(value.denominator for value in values))
    return sorted(int(value * scale) for value in values)


def _injective(digits: List[int], n: int, t: int) -> Optional[bool]:
    """Whether sum t^i y_i is injective on digits^n; None when too large to decide by enumeration."""
    if t > digits[-1] - digits[0]:
        return True
    if len(digits) ** n > COLLISION_CAP:
        return None
    level = {0}
    for depth in range(1, n + 1):
        level = {value * t + digit for value in level for digit in digits}
        if len(level) != len(digits) ** depth:
            return False
    return True


@dataclass(frozen=True)
class AmplifiedSystem:
    """psi_t(B^(+n)), kept lazy: sizes are exact, points are materialized only when small."""
    base: ProjectionSystem
    hypothesis: Tuple[Slope, ...]
    epsilon: Fraction
    m: int
    n: int
    t: int

    def size_of(self, slope: Slope) -> int:
        return len(project(self.base.points, slope)) ** self.n

    @property
    def size(self) -> int:
        return len(self.base.points) ** self.n

    def points(self, cap: int = MATERIALIZE_CAP) -> FrozenSet[Point]:
        if self.size > cap:
            raise TooLarge(f"amplified set has {self.size} points, cap is {cap}")
        return frozenset(_collapse(block, self.t) for block in tensor_power(self.base.points, self.n))

    def inequality_holds(self) -> bool:
        a, b = self.epsilon.numerator, self.epsilon.denominator
        worst = max(self.size_of(slope) for slope in self.hypothesis)
        return self.size_of(DISTINGUISHED) ** b > self.m ** b * worst ** (b + a)

    def dump(self) -> dict:
        sizes = {slope_text(slope): self.size_of(slope) for slope in self.hypothesis + (DISTINGUISHED,)}
        payload = {"n": self.n, "t": self.t, "m": self.m, "epsilon": str(self.epsilon), "size": self.size,
                   "projection_sizes": sizes, "holds": self.inequality_holds()}
        if self.size <= MATERIALIZE_CAP:
            payload["points"] = [list(point) for point in sorted(self.points())]
        return payload


def amplify(system: ProjectionSystem, epsilon, m: int, hypothesis: Optional[Iterable[Any]] = None,
            n: Optional[int] = None) -> AmplifiedSystem:
    """Amplify |pi_-1(B)| > max_j |pi_j(B)|^(1+eps) until the margin exceeds the factor M.

    :param hypothesis: the slopes S the hypothesis ranges over, all slopes of the system by default.
    :param n: force the tensor power instead of taking the least sufficient one.
    """
    epsilon = Fraction(epsilon)
    if epsilon < 0:
        raise ConfigInvalid(f"epsilon must be nonnegative, got {epsilon}")
    if m < 1:
        raise ConfigInvalid(f"amplification factor must be positive, got {m}")
    slopes = system.slopes if hypothesis is None else tuple(parse_slope(s) for s in hypothesis)
    if not slopes or any(slope not in system.slopes for slope in slopes):
        raise ConfigInvalid("hypothesis slopes must be a nonempty subset of the system slopes")
    a, b = epsilon.numerator, epsilon.denominator
    top = len(project(system.points, DISTINGUISHED))
    worst = max(len(project(system.points, slope)) for slope in slopes)
    if top ** b <= worst ** (b + a):
        raise HypothesisFails(f"|pi_-1(B)| = {top} does not exceed {worst}^(1+{epsilon})",
                              {"distinguished": top, "worst": worst, "epsilon": str(epsilon)})
    if n is None:
        n = 1
        while top ** (n * b) <= m ** b * worst ** (n * (b + a)):
            n += 1
    logger.debug(f"amplify: tensor power n={n} for M={m}, eps={epsilon}")

    # one t serves every projection and both coordinates, so psi_t is injective on B^(+n) too
    digits = [_integral_digits(system.points, slope) for slope in set(slopes + (DISTINGUISHED, None, Fraction(0)))]
    t = 1
    while not all(_injective(values, n, t) for values in digits):
        t += 1
    result = AmplifiedSystem(system, slopes, epsilon, m, n, t)
    if not result.inequality_holds():
        raise HypothesisFails("amplified system misses the target inequality", result.dump())
    logger.info(f"amplified |B|={len(system.points)} to n={n}, t={t}")
    return result
