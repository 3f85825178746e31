# -*- coding: utf-8 -*-
"""Sums and differences along a graph, and the lower bound they give for three-point patterns.

For U = {pq, q, 2pq/(p+1)} a cover with witnesses r(x) yields A1 = {x + pq r(x)} and
A2 = p{x + q r(x)} joined along x. Sums along the graph are (p+1)(x + 2pq r(x)/(p+1)), all inside
(p+1)B, while differences are (1-p)x, one per basepoint. The sum-difference inequality then
forces |B|^11 >= N^6.
"""
import math
from fractions import Fraction
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple
from loguru import logger
from modules.errors import ConfigInvalid, InvalidCover
from modules.patterns import PatternFamily, RingContext, RingKind
from modules.solver.problem import CoverSolution


@dataclass(frozen=True)
class SumsetGraphInstance:
    """Integer sets A1, A2 and a graph G inside A1 x A2; untouched elements are dropped."""
    a1: FrozenSet[int]
    a2: FrozenSet[int]
    graph: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        if not self.graph:
            raise ConfigInvalid("sumset graph must be nonempty")
        stray = [(a, b) for a, b in self.graph if a not in self.a1 or b not in self.a2]
        if stray:
            raise ConfigInvalid("graph edges leave A1 x A2", {"edges": [list(edge) for edge in stray[:10]]})
        object.__setattr__(self, "a1", frozenset(a for a, _ in self.graph))
        object.__setattr__(self, "a2", frozenset(b for _, b in self.graph))

    @classmethod
    def of(cls, a1: Iterable[int], a2: Iterable[int], graph: Optional[Iterable[Tuple[int, int]]] = None):
        a1, a2 = frozenset(a1), frozenset(a2)
        edges = frozenset(graph) if graph is not None else frozenset((a, b) for a in a1 for b in a2)
        return cls(a1, a2, edges)

    @property
    def sums(self) -> FrozenSet[int]:
        return frozenset(a + b for a, b in self.graph)

    @property
    def differences(self) -> FrozenSet[int]:
        return frozenset(a - b for a, b in self.graph)


@dataclass(frozen=True)
class KatzTaoReport:
    n: int
    sum_size: int
    diff_size: int
    holds: bool

    @property
    def bound(self) -> float:
        """n^(11/6) as a float, for reports only; ``holds`` is decided in integers."""
        return self.n ** (11 / 6)

    def dump(self) -> dict:
        return {"n": self.n, "sum_size": self.sum_size, "diff_size": self.diff_size,
                "bound": self.bound, "holds": self.holds}


def within_sumset_bound(diff_size: int, n: int) -> bool:
    """diff_size <= n^(11/6), compared as diff_size^6 <= n^11."""
    return diff_size ** 6 <= n ** 11


def verify_katz_tao(instance: SumsetGraphInstance) -> KatzTaoReport:
    """|A1 -G A2| <= n^(11/6) checked as diff^6 <= n^11 in integers."""
    sums, diffs = instance.sums, instance.differences
    n = max(len(instance.a1), len(instance.a2), len(sums))
    holds = within_sumset_bound(len(diffs), n)
    if not holds:
        logger.warning(f"sum-difference bound fails: {len(diffs)} differences against n={n}")
    return KatzTaoReport(n, len(sums), len(diffs), holds)


def harmonic_mean_family(p: int, q) -> PatternFamily:
    """The three-point family {pq, q, 2pq/(p+1)}."""
    q = Fraction(q)
    values = [p * q, q, Fraction(2 * p) * q / (p + 1)]
    values = [value.numerator if value.denominator == 1 else value for value in values]
    ring = RingContext.rationals() if any(isinstance(value, Fraction) for value in values) else None
    return PatternFamily.of(values, ring, label=f"harmonic-mean({p},{q})")


def infer_harmonic_mean(family: PatternFamily) -> Tuple[int, Fraction]:
    """Recover (p, q) with family = {pq, q, 2pq/(p+1)} and p >= 2 an integer."""
    if family.k != 3 or family.ring.kind not in (RingKind.INTEGERS, RingKind.RATIONALS):
        raise ConfigInvalid(f"{family} is not a three-point rational family")
    values = [Fraction(u) for u in family]
    for q in values:
        for pq in values:
            if pq == q or q == 0:
                continue
            p = pq / q
            if p.denominator != 1 or p < 2:
                continue
            p = int(p)
            rest = [u for u in values if u not in (q, pq)]
            if rest == [2 * pq / (p + 1)]:
                return p, q
    raise ConfigInvalid(f"{family} is not of the form {{pq, q, 2pq/(p+1)}}")


@dataclass(frozen=True)
class LowerBoundReport:
    p: int
    q: Fraction
    basepoints: int
    cover_size: int
    a1_size: int
    a2_size: int
    katz_tao: KatzTaoReport
    bound_holds: bool
    chain_holds: bool

    def dump(self) -> dict:
        return {"p": self.p, "q": str(self.q), "basepoints": self.basepoints, "cover_size": self.cover_size,
                "a1_size": self.a1_size, "a2_size": self.a2_size, "katz_tao": self.katz_tao.dump(),
                "bound_holds": self.bound_holds, "chain_holds": self.chain_holds}


def katz_tao_wiring(p: int, q, witnesses) -> SumsetGraphInstance:
    """Build A1, pA2 and the graph from basepoint -> scale witnesses, cleared of denominators."""
    q = Fraction(q)
    edges = [(Fraction(x) + Fraction(r) * p * q, p * (Fraction(x) + Fraction(r) * q)) for x, r in witnesses]
    c = math.lcm(*(value.denominator for edge in edges for value in edge))
    edges = [(int(a * c), int(b * c)) for a, b in edges]
    return SumsetGraphInstance.of((a for a, _ in edges), (b for _, b in edges), edges)


def lower_bound_instance(family: PatternFamily, solution: CoverSolution) -> LowerBoundReport:
    """Check |B| >= N^(6/11) for a cover by {pq, q, 2pq/(p+1)} patterns through the sumset bound."""
    if solution.problem.demand.differences:
        raise InvalidCover("the sumset bound needs basepoint witnesses")
    if not solution.verify():
        raise InvalidCover("cover does not contain its witness patterns", {"size": solution.size})
    p, q = infer_harmonic_mean(family)
    witnesses = sorted(solution.witnesses.items())
    n_basepoints, size = len(witnesses), solution.size
    instance = katz_tao_wiring(p, q, witnesses)
    report = verify_katz_tao(instance)
    chain = max(len(instance.a1), len(instance.a2), report.sum_size) <= size and report.diff_size == n_basepoints
    bound = size ** 11 >= n_basepoints ** 6
    logger.debug(f"sumset chain for p={p}, q={q}: |A1|={len(instance.a1)}, |A2|={len(instance.a2)}, "
                 f"sums={report.sum_size}, diffs={report.diff_size}, |B|={size}, N={n_basepoints}")
    return LowerBoundReport(p, q, n_basepoints, size, len(instance.a1), len(instance.a2), report, bound, chain)
