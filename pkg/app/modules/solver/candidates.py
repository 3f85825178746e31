# -*- coding: utf-8 -*-
"""Candidate patterns of a windowed cover problem, with points indexed as bit masks."""
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple
from loguru import logger
from modules.errors import ConfigInvalid
from modules.patterns import Element, IntRange, PatternSet, RingKind
from modules.solver.problem import CoverProblem


@dataclass(frozen=True)
class Candidate:
    item: Element
    witness: Element
    mask: int


@dataclass
class CandidateTable:
    """All usable patterns, grouped by the demand item they would serve.

    ``universe[i]`` is the point behind bit ``i``. Candidates of one item are ordered by witness
    (scale for basepoint demands, basepoint for difference demands) and deduplicated by mask.
    """
    problem: CoverProblem
    universe: List[Element]
    by_item: Dict[Element, List[Candidate]]

    @property
    def items(self) -> List[Element]:
        return list(self.by_item)

    def points_of(self, mask: int) -> PatternSet:
        ring = self.problem.ring
        return PatternSet(ring, frozenset(self.universe[i] for i in _bits(mask)))

    def mask_of(self, values) -> int:
        index = {point: i for i, point in enumerate(self.universe)}
        mask = 0
        for value in values:
            if value in index:
                mask |= 1 << index[value]
        return mask

    def witnesses_in(self, mask: int) -> Dict[Element, Element]:
        """First candidate per item whose pattern lies inside ``mask``."""
        found = {}
        for item, candidates in self.by_item.items():
            for candidate in candidates:
                if candidate.mask & ~mask == 0:
                    found[item] = candidate.witness
                    break
        return found


def _bits(mask: int) -> Iterator[int]:
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def _difference_basepoints(problem: CoverProblem, d: Element) -> Iterator[Element]:
    ring = problem.ring
    if problem.basepoints is not None or ring.finite:
        return ring.points(problem.basepoints)
    # no basepoint window: every basepoint whose pattern fits the point window
    window = problem.points
    if window is None or ring.vectors:
        raise ConfigInvalid("difference demands need a basepoint or point window")
    offsets = [ring.scale(d, u) for u in problem.family]
    lo, hi = window.lo - max(offsets), window.hi - min(offsets)
    values = range(math.ceil(lo), math.floor(hi) + 1)
    if ring.kind == RingKind.RATIONALS:
        return (ring.coerce(value) for value in values)
    return iter(values)


def _items(problem: CoverProblem) -> List[Element]:
    ring, demand = problem.ring, problem.demand
    if demand.listed:
        return [ring.coerce(value) for value in demand.targets]
    if demand.differences:
        return list(ring.scales(problem.scales))
    return list(ring.points(problem.basepoints))


def _fits(window: Optional[IntRange], points) -> bool:
    return window is None or all(point in window for point in points)


def build_candidates(problem: CoverProblem) -> CandidateTable:
    ring, family = problem.ring, problem.family
    patterns: Dict[Element, List[Tuple[Element, Tuple[Element, ...]]]] = {}
    for item in _items(problem):
        found = []
        if problem.demand.differences:
            if ring.is_zero(item):
                continue
            for a in _difference_basepoints(problem, item):
                points = tuple(ring.add(a, ring.scale(item, u)) for u in family)
                if len(set(points)) == family.k and _fits(problem.points, points):
                    found.append((a, points))
        else:
            for r in ring.scales(problem.scales):
                points = tuple(ring.add(item, ring.scale(r, u)) for u in family)
                if len(set(points)) == family.k and _fits(problem.points, points):
                    found.append((r, points))
        patterns[item] = found

    universe = sorted({point for found in patterns.values() for _, points in found for point in points})
    index = {point: i for i, point in enumerate(universe)}
    by_item: Dict[Element, List[Candidate]] = {}
    for item, found in patterns.items():
        seen, candidates = set(), []
        for witness, points in sorted(found, key=lambda entry: entry[0]):
            mask = 0
            for point in points:
                mask |= 1 << index[point]
            if mask not in seen:
                seen.add(mask)
                candidates.append(Candidate(item, witness, mask))
        by_item[item] = candidates
    logger.debug(f"candidate table: {len(by_item)} items, {len(universe)} points, "
                 f"{sum(len(c) for c in by_item.values())} patterns")
    return CandidateTable(problem, universe, by_item)
