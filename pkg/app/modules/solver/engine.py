# -*- coding: utf-8 -*-
import time
from typing import Dict, List, Optional, Tuple
from loguru import logger
from modules.errors import BudgetExhausted, Infeasible
from modules.solver.candidates import CandidateTable, build_candidates
from modules.solver.problem import Budget, CoverProblem, CoverSolution


class _Exhausted(Exception):
    pass


class _Search:
    """Shared bookkeeping for one branch-and-bound run."""

    def __init__(self, table: CandidateTable, budget: Budget):
        self.table = table
        self.budget = budget
        self.nodes = 0
        self.started = time.monotonic()
        self.best: Optional[int] = None
        self.visited = set()

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.nodes:
            raise _Exhausted()
        if self.nodes % 1024 == 0 and time.monotonic() - self.started > self.budget.seconds:
            raise _Exhausted()

    def offer(self, mask: int):
        if self.best is None or mask.bit_count() < self.best.bit_count():
            self.best = mask

    def beaten(self, size: int) -> bool:
        return self.best is not None and size >= self.best.bit_count()


def _covered(candidates, mask: int) -> bool:
    return any(candidate.mask & ~mask == 0 for candidate in candidates)


def _residual_bound(table: CandidateTable, mask: int, uncovered) -> int:
    """Points any completion must still add: greedy over items with disjoint residual unions."""
    residuals = []
    for item in uncovered:
        fresh = [candidate.mask & ~mask for candidate in table.by_item[item]]
        union = 0
        for value in fresh:
            union |= value
        residuals.append((min(value.bit_count() for value in fresh), union))
    residuals.sort(key=lambda entry: -entry[0])
    used, total = 0, 0
    for least, union in residuals:
        if union & used == 0:
            total += least
            used |= union
    return total


def _greedy_every(table: CandidateTable) -> int:
    mask = 0
    for item in sorted(table.items, key=lambda item: len(table.by_item[item])):
        candidates = table.by_item[item]
        if _covered(candidates, mask):
            continue
        pick = min(candidates, key=lambda candidate: (candidate.mask & ~mask).bit_count())
        mask |= pick.mask
    return mask


def _search_every(table: CandidateTable, search: _Search):
    order = {item: position for position, item in enumerate(table.items)}
    stack = [0]
    search.visited.add(0)
    while stack:
        mask = stack.pop()
        size = mask.bit_count()
        if search.beaten(size):
            continue
        search.tick()
        uncovered = [item for item in table.items if not _covered(table.by_item[item], mask)]
        if not uncovered:
            search.offer(mask)
            continue
        if search.beaten(size + _residual_bound(table, mask, uncovered)):
            continue
        item = min(uncovered, key=lambda item: (len(table.by_item[item]), order[item]))
        children = sorted(enumerate(table.by_item[item]),
                          key=lambda entry: ((entry[1].mask & ~mask).bit_count(), entry[0]))
        # reversed so the most promising child is expanded first
        for _, candidate in reversed(children):
            child = mask | candidate.mask
            if child not in search.visited and not search.beaten(child.bit_count()):
                search.visited.add(child)
                stack.append(child)


def count_pool(table: CandidateTable) -> List[Tuple[int, frozenset]]:
    """Distinct pattern masks with the items each one serves, smallest first."""
    served: Dict[int, set] = {}
    first: Dict[int, int] = {}
    position = 0
    for item, candidates in table.by_item.items():
        for candidate in candidates:
            served.setdefault(candidate.mask, set()).add(item)
            first.setdefault(candidate.mask, position)
            position += 1
    masks = sorted(served, key=lambda mask: (mask.bit_count(), first[mask]))
    return [(mask, frozenset(served[mask])) for mask in masks]


def coverage(pool, mask: int) -> set:
    covered = set()
    for pattern, items in pool:
        if pattern & ~mask == 0:
            covered |= items
    return covered


def _greedy_count(pool, need: int) -> Optional[int]:
    mask, covered = 0, set()
    while len(covered) < need:
        options = [(pattern, items) for pattern, items in pool if items - covered]
        if not options:
            return None
        pattern, _ = min(options, key=lambda entry: ((entry[0] & ~mask).bit_count(), -len(entry[1] - covered)))
        mask |= pattern
        covered = coverage(pool, mask)
    return mask


def _search_count(pool, need: int, search: _Search):
    stack = [0]
    search.visited.add(0)
    while stack:
        mask = stack.pop()
        size = mask.bit_count()
        if search.beaten(size + 1):
            continue
        search.tick()
        covered = coverage(pool, mask)
        children = []
        for pattern, items in pool:
            if pattern & ~mask == 0 or not items - covered:
                continue
            child = mask | pattern
            if child in search.visited:
                continue
            search.visited.add(child)
            if search.beaten(child.bit_count()):
                continue
            if len(coverage(pool, child)) >= need:
                search.offer(child)
                continue
            children.append(child)
        for child in reversed(children):
            stack.append(child)


def build_solution(table: CandidateTable, mask: int, certified: bool, nodes: int, engine: str) -> CoverSolution:
    problem = table.problem
    witnesses = table.witnesses_in(mask)
    if problem.demand.listed:
        wanted = set(problem.demand.targets)
        witnesses = {item: witness for item, witness in witnesses.items() if item in wanted}
    return CoverSolution(problem, table.points_of(mask), witnesses, certified, nodes, engine)


def check_feasible(table: CandidateTable):
    problem = table.problem
    if problem.demand.listed:
        missing = [item for item in table.items if not table.by_item[item]]
        if missing:
            ring = problem.ring
            raise Infeasible(f"{len(missing)} demanded items have no pattern inside the windows",
                             {"items": [ring.dump(item) for item in missing[:20]],
                              "window_used": problem.window_used()})
    else:
        servable = sum(1 for candidates in table.by_item.values() if candidates)
        if servable < problem.demand.count:
            raise Infeasible(f"only {servable} items can carry a pattern inside the windows, "
                             f"{problem.demand.count} demanded", {"window_used": problem.window_used()})


def solve_min_cover(problem: CoverProblem, budget: Budget = Budget()) -> CoverSolution:
    """Minimum cover inside the problem windows.

    The search is a depth first branch-and-bound over unions of candidate patterns, deduplicated
    through a visited set. It starts from a greedy incumbent, so running out of budget still
    returns a valid cover flagged as uncertified unless ``budget.strict`` is set.
    """
    table = build_candidates(problem)
    check_feasible(table)
    search = _Search(table, budget)
    pool = None
    if problem.demand.listed:
        search.offer(_greedy_every(table))
    else:
        pool = count_pool(table)
        greedy = _greedy_count(pool, problem.demand.count)
        if greedy is not None:
            search.offer(greedy)
    logger.debug(f"greedy incumbent has {search.best.bit_count()} points")
    try:
        if pool is None:
            _search_every(table, search)
        else:
            _search_count(pool, problem.demand.count, search)
    except _Exhausted:
        incumbent = build_solution(table, search.best, False, search.nodes, "branch-and-bound")
        logger.warning(f"search budget exhausted after {search.nodes} nodes, incumbent size {incumbent.size}")
        if budget.strict:
            raise BudgetExhausted(f"search budget exhausted after {search.nodes} nodes", incumbent,
                                  {"nodes": search.nodes, "incumbent_size": incumbent.size})
        return incumbent
    solution = build_solution(table, search.best, True, search.nodes, "branch-and-bound")
    logger.info(f"minimum cover of size {solution.size} certified after {search.nodes} nodes")
    return solution
