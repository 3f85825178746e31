# -*- coding: utf-8 -*-
import math
from enum import Enum
from dataclasses import dataclass, field
from typing import List, Optional, Sequence
from loguru import logger
from modules.errors import BudgetExhausted, ConfigInvalid, WorkbenchError
from modules.patterns import IntRange, PatternFamily, RingContext, ScaleRange
from modules.solver.engine import solve_min_cover
from modules.solver.problem import Budget, CoverProblem, Demand


class Quantity(str, Enum):
    F = "f"                  # every difference in [N]
    F_PRIME = "f-prime"      # N distinct differences
    G = "g"                  # every basepoint in [N]
    G_PRIME = "g-prime"      # N distinct basepoints
    G_FIELD = "g-field"      # every basepoint of F_N, N prime


@dataclass(frozen=True)
class Windows:
    scales: ScaleRange = ScaleRange(-10, 10)
    basepoints: Optional[IntRange] = None
    points: Optional[IntRange] = None


def make_problem(quantity: Quantity, family: PatternFamily, n: int, windows: Windows = Windows()) -> CoverProblem:
    """The windowed cover problem behind one value of an extremal quantity."""
    if n < 1:
        raise ConfigInvalid(f"N must be positive, got {n}")
    if quantity == Quantity.G_FIELD:
        ring = RingContext.field(n)
        field_family = PatternFamily.of(list(family.elements), ring, family.label)
        return CoverProblem(field_family, Demand.every_basepoint(range(n)), windows.scales)
    if quantity == Quantity.G:
        demand = Demand.every_basepoint(family.ring.coerce(x) for x in range(1, n + 1))
    elif quantity == Quantity.G_PRIME:
        demand = Demand.count_basepoints(n)
    elif quantity == Quantity.F:
        demand = Demand.every_difference(family.ring.coerce(d) for d in range(1, n + 1))
    else:
        demand = Demand.count_differences(n)
    return CoverProblem(family, demand, windows.scales, windows.basepoints, windows.points)


@dataclass(frozen=True)
class ExponentRow:
    n: int
    size: Optional[int]
    exponent: Optional[float]
    certified: bool
    partial: bool = False
    error: str = ""

    def dump(self) -> dict:
        return {"n": self.n, "size": self.size, "exponent": self.exponent, "certified": self.certified,
                "partial": self.partial, "error": self.error}


@dataclass
class ExponentTable:
    quantity: Quantity
    family: PatternFamily
    rows: List[ExponentRow] = field(default_factory=list)

    def dump(self) -> dict:
        return {"quantity": self.quantity.value, "family": self.family.dump(),
                "rows": [row.dump() for row in self.rows]}


def _exponent(size: int, n: int) -> Optional[float]:
    if n <= 1 or size < 1:
        return None
    return math.log(size) / math.log(n)


def exponent_curve(quantity: Quantity, family: PatternFamily, ns: Sequence[int], windows: Windows = Windows(),
                   budget: Budget = Budget()) -> ExponentTable:
    """Solve one instance per N and tabulate log(size)/log(N).

    A failing row does not stop the table; it is kept with ``partial`` set and the error text.
    """
    table = ExponentTable(quantity, family)
    for n in sorted(set(ns)):
        try:
            solution = solve_min_cover(make_problem(quantity, family, n, windows), budget)
            row = ExponentRow(n, solution.size, _exponent(solution.size, n), solution.certified_optimal,
                              partial=not solution.certified_optimal)
        except BudgetExhausted as ex:
            size = ex.incumbent.size if ex.incumbent is not None else None
            row = ExponentRow(n, size, None if size is None else _exponent(size, n), False, True, ex.message)
        except WorkbenchError as ex:
            logger.warning(f"{quantity.value} at N={n} failed: {ex.message}")
            row = ExponentRow(n, None, None, False, True, ex.message)
        logger.debug(f"{quantity.value}({n}) = {row.size}")
        table.rows.append(row)
    return table


@dataclass(frozen=True)
class SweepRow:
    radius: int
    size: Optional[int]
    certified: bool
    error: str = ""

    def dump(self) -> dict:
        return {"radius": self.radius, "size": self.size, "certified": self.certified, "error": self.error}


def window_sweep(quantity: Quantity, family: PatternFamily, n: int, radii: Sequence[int],
                 positive: bool = False, budget: Budget = Budget()) -> List[SweepRow]:
    """Re-solve one instance with basepoints and scales in [-R, R] for growing R.

    Sizes are reported as found; nothing is claimed about their limit.
    """
    rows = []
    for radius in sorted(set(radii)):
        if radius < 1:
            raise ConfigInvalid(f"sweep radius must be positive, got {radius}")
        windows = Windows(ScaleRange(-radius, radius, positive), IntRange(-radius, radius))
        try:
            solution = solve_min_cover(make_problem(quantity, family, n, windows), budget)
            rows.append(SweepRow(radius, solution.size, solution.certified_optimal))
        except WorkbenchError as ex:
            rows.append(SweepRow(radius, None, False, ex.message))
    return rows
