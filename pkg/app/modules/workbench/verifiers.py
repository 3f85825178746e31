# -*- coding: utf-8 -*-
"""Re-verification of stored records.

Records carrying witnesses are re-checked pattern by pattern; the rest are recomputed from
their inputs and seed and compared with what was stored.
"""
from typing import Callable, Dict
from loguru import logger
from modules.constructions import TowerState
from modules.errors import InvalidCover
from modules.fields import FieldCover
from modules.patterns import PatternFamily, PatternSet, RingContext, family_from_json, require_cover
from modules.reports import ResultRecord, normalize
from modules.solver import Budget, CoverProblem, CoverSolution
from modules.workbench.handlers import HANDLERS, Job


def job_of(record: ResultRecord) -> Job:
    parameters = dict(record.inputs)
    budget = parameters.pop("budget", None) or {}
    return Job(parameters, record.seed, Budget(**budget))


def _solve(record: ResultRecord) -> bool:
    problem = CoverProblem.load(record.outputs["problem"])
    solution = CoverSolution.load(problem, record.outputs["solution"])
    return solution.size == record.outputs["size"] and solution.verify()


def _tower(record: ResultRecord) -> bool:
    for level in record.outputs["levels"]:
        state = TowerState(level["level"], record.outputs["k"], tuple(level["B"]),
                           {s: r for s, r in level["witnesses"]})
        try:
            state.verify()
        except InvalidCover as ex:
            logger.debug(f"tower level {level['level']} fails: {ex.message}")
            return False
    return True


def _powers(record: ResultRecord) -> bool:
    ring = RingContext.integers()
    family = PatternFamily.of([1, 2], ring, "{1,2}")
    witnesses = [(x, r) for x, r in record.outputs["witnesses"]]
    try:
        require_cover(PatternSet.of(ring, record.outputs["B"]), family, witnesses)
    except InvalidCover:
        return False
    return len(witnesses) == record.outputs["count"]


def _field(record: ResultRecord) -> bool:
    payload = record.outputs["cover"]
    p, n = payload["p"], payload["n"]
    ring = RingContext.field(p, n)
    cover = FieldCover(p, n, family_from_json(payload["family"]), frozenset(ring.load(a) for a in payload["A"]),
                       {ring.load(x): ring.load(r) for x, r in payload["witnesses"]})
    return cover.size == record.outputs["size"] and cover.verify()


def _recompute(record: ResultRecord) -> bool:
    handler = HANDLERS.get(record.command)
    if handler is None:
        return False
    return normalize(handler.compute(job_of(record))) == record.outputs


WITNESS_CHECKS: Dict[str, Callable[[ResultRecord], bool]] = {
    "solve": _solve,
    "construct:tower": _tower,
    "construct:powers": _powers,
    "ff:solve": _field,
}


def verify_record(record: ResultRecord) -> bool:
    check = WITNESS_CHECKS.get(record.command, _recompute)
    return check(record)
