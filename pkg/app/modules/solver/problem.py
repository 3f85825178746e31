# -*- coding: utf-8 -*-
import json
import hashlib
from enum import Enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple
from modules.errors import ConfigInvalid
from modules.patterns import (
    Element, IntRange, PatternFamily, PatternSet, RingContext, ScaleRange, family_from_json, verify_cover
)


class DemandKind(str, Enum):
    EVERY_BASEPOINT = "every-basepoint"
    COUNT_BASEPOINTS = "count-basepoints"
    EVERY_DIFFERENCE = "every-difference"
    COUNT_DIFFERENCES = "count-differences"


@dataclass(frozen=True)
class Demand:
    """What a cover has to deliver: listed items, or a number of distinct items.

    Basepoint demands ask for patterns x + r*U at the items x; difference demands ask for
    patterns a + d*U with the items d as scales, the witness being the basepoint a.
    """
    kind: DemandKind
    targets: Tuple[Element, ...] = ()
    count: int = 0

    def __post_init__(self):
        if self.listed and not self.targets:
            raise ConfigInvalid("demand set must be nonempty")
        if not self.listed and self.count < 1:
            raise ConfigInvalid(f"demand count must be positive, got {self.count}")

    @property
    def listed(self) -> bool:
        return self.kind in (DemandKind.EVERY_BASEPOINT, DemandKind.EVERY_DIFFERENCE)

    @property
    def differences(self) -> bool:
        return self.kind in (DemandKind.EVERY_DIFFERENCE, DemandKind.COUNT_DIFFERENCES)

    @classmethod
    def every_basepoint(cls, targets: Iterable[Element]) -> "Demand":
        return cls(DemandKind.EVERY_BASEPOINT, tuple(sorted(set(targets))))

    @classmethod
    def count_basepoints(cls, count: int) -> "Demand":
        return cls(DemandKind.COUNT_BASEPOINTS, count=count)

    @classmethod
    def every_difference(cls, targets: Iterable[Element]) -> "Demand":
        return cls(DemandKind.EVERY_DIFFERENCE, tuple(sorted(set(targets))))

    @classmethod
    def count_differences(cls, count: int) -> "Demand":
        return cls(DemandKind.COUNT_DIFFERENCES, count=count)


@dataclass(frozen=True)
class Budget:
    """Search limits; the node limit is the reproducible one, seconds only cap wall time."""
    nodes: int = 2_000_000
    seconds: float = 60.0
    strict: bool = False

    def __post_init__(self):
        if self.nodes < 1 or self.seconds <= 0:
            raise ConfigInvalid("search budget must be positive")


@dataclass(frozen=True)
class CoverProblem:
    """A windowed extremal cover question.

    :param family: the pattern family U.
    :param demand: which basepoints or differences must carry patterns.
    :param scales: scale range; for difference demands it is also the pool of differences.
    :param basepoints: basepoint window for counted basepoint demands and for the witness
        basepoints of difference demands.
    :param points: optional window every cover point must lie in.
    """
    family: PatternFamily
    demand: Demand
    scales: ScaleRange = ScaleRange(-10, 10)
    basepoints: Optional[IntRange] = None
    points: Optional[IntRange] = None

    def __post_init__(self):
        finite = self.ring.finite
        if not finite and not self.scales.bounded:
            raise ConfigInvalid("cover search needs a bounded scale range")
        if not finite and self.basepoints is None:
            if self.demand.differences and self.points is None:
                raise ConfigInvalid("difference demands need a basepoint or point window")
            if not self.demand.differences and not self.demand.listed:
                raise ConfigInvalid("counted basepoint demands need a basepoint window")

    @property
    def ring(self) -> RingContext:
        return self.family.ring

    def window_used(self) -> Dict[str, Optional[str]]:
        return {"scales": str(self.scales), "basepoints": None if self.basepoints is None else str(self.basepoints),
                "points": None if self.points is None else str(self.points)}

    def dump(self) -> dict:
        ring = self.ring
        demand = {"kind": self.demand.kind.value}
        if self.demand.listed:
            demand["targets"] = [ring.dump(value) for value in self.demand.targets]
        else:
            demand["count"] = self.demand.count
        return {"family": self.family.dump(), "demand": demand, "scales": {
            "lo": self.scales.lo, "hi": self.scales.hi, "positive": self.scales.positive},
            "basepoints": None if self.basepoints is None else [self.basepoints.lo, self.basepoints.hi],
            "points": None if self.points is None else [self.points.lo, self.points.hi]}

    @classmethod
    def load(cls, payload: dict) -> "CoverProblem":
        family = family_from_json(payload["family"])
        ring = family.ring
        raw = payload["demand"]
        kind = DemandKind(raw["kind"])
        if kind in (DemandKind.EVERY_BASEPOINT, DemandKind.EVERY_DIFFERENCE):
            demand = Demand(kind, tuple(sorted(ring.load(value) for value in raw["targets"])))
        else:
            demand = Demand(kind, count=int(raw["count"]))
        scales = ScaleRange(payload["scales"]["lo"], payload["scales"]["hi"], payload["scales"]["positive"])
        basepoints = IntRange(*payload["basepoints"]) if payload.get("basepoints") else None
        points = IntRange(*payload["points"]) if payload.get("points") else None
        return cls(family, demand, scales, basepoints, points)

    def digest(self) -> str:
        """Canonical hash of the problem, stable across runs."""
        text = json.dumps({"problem": self.dump()}, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class CoverSolution:
    """A cover with one verified witness per covered item.

    ``witnesses`` maps basepoints to scales, or differences to basepoints for difference demands.
    """
    problem: CoverProblem
    cover: PatternSet
    witnesses: Dict[Element, Element]
    certified_optimal: bool
    nodes: int = 0
    engine: str = "branch-and-bound"
    notes: List[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.cover)

    @property
    def window_used(self) -> Dict[str, Optional[str]]:
        return self.problem.window_used()

    def pairs(self) -> List[Tuple[Element, Element]]:
        """(basepoint, scale) pairs behind every witness."""
        if self.problem.demand.differences:
            return [(a, d) for d, a in self.witnesses.items()]
        return list(self.witnesses.items())

    def verify(self) -> bool:
        if verify_cover(self.cover, self.problem.family, self.pairs()):
            return False
        demand = self.problem.demand
        if demand.listed:
            return set(demand.targets) <= set(self.witnesses)
        return len(self.witnesses) >= demand.count

    def dump(self) -> dict:
        ring = self.problem.ring
        return {"size": self.size, "cover": self.cover.dump(),
                "witnesses": [[ring.dump(item), ring.dump(witness)] for item, witness in self.witnesses.items()],
                "certified": self.certified_optimal, "window_used": self.window_used,
                "nodes": self.nodes, "engine": self.engine}

    @classmethod
    def load(cls, problem: CoverProblem, payload: dict) -> "CoverSolution":
        ring = problem.ring
        cover = PatternSet.of(ring, [ring.load(value) for value in payload["cover"]])
        witnesses = {ring.load(item): ring.load(witness) for item, witness in payload["witnesses"]}
        return cls(problem, cover, witnesses, bool(payload["certified"]), int(payload.get("nodes", 0)),
                   payload.get("engine", "branch-and-bound"))
