# -*- coding: utf-8 -*-
import itertools
from loguru import logger
from modules.errors import TooLarge
from modules.solver.candidates import build_candidates
from modules.solver.engine import check_feasible, coverage, count_pool, build_solution
from modules.solver.problem import CoverProblem, CoverSolution

ORACLE_CAP = 24


def brute_force_oracle(problem: CoverProblem, cap: int = ORACLE_CAP) -> CoverSolution:
    """Exact minimum by enumerating subsets of the candidate points in increasing size.

    Only meant as a cross check of :func:`solve_min_cover` on tiny windows.
    """
    table = build_candidates(problem)
    universe = len(table.universe)
    if universe > min(cap, ORACLE_CAP):
        raise TooLarge(f"oracle universe has {universe} points, cap is {min(cap, ORACLE_CAP)}",
                       {"points": universe, "window_used": problem.window_used()})
    check_feasible(table)
    pool = None if problem.demand.listed else count_pool(table)
    checked = 0
    for size in range(1, universe + 1):
        for chosen in itertools.combinations(range(universe), size):
            checked += 1
            mask = 0
            for index in chosen:
                mask |= 1 << index
            if pool is None:
                done = all(any(candidate.mask & ~mask == 0 for candidate in candidates)
                           for candidates in table.by_item.values())
            else:
                done = len(coverage(pool, mask)) >= problem.demand.count
            if done:
                logger.debug(f"oracle found size {size} after {checked} subsets")
                return build_solution(table, mask, True, checked, "oracle")
    raise AssertionError("feasible problem without a cover")
