# -*- coding: utf-8 -*-
"""Known bounds on the progression dimension f(m), and the polytope dimension intervals built on them.

f(m) is the least dimension of a set of reals holding an m-term progression of every difference
in [0, 1]. A set holding a homothet of a harmonic polytope at every point of a centre segment has
dimension n - 1 + f(m); the g-type problem centres a homothet at every point of the unit cube.
"""
from enum import Enum
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple
from loguru import logger
from modules.errors import ConfigInvalid, RegistryMiss
from modules.geometry.harmonic import harmonic_index_extract
from modules.geometry.polytope import PolytopeSpec


class BoundKind(str, Enum):
    SEGMENT = "h"
    CUBE = "g"


@dataclass(frozen=True)
class BoundEntry:
    lower: Fraction
    upper: Fraction
    provenance: Tuple[str, ...]

    def __post_init__(self):
        if self.lower > self.upper:
            raise ConfigInvalid(f"bound entry has lower {self.lower} above upper {self.upper}")
        if not self.provenance:
            raise ConfigInvalid("every bound entry needs a provenance tag")

    def dump(self) -> dict:
        return {"lower": str(self.lower), "upper": str(self.upper), "provenance": list(self.provenance)}


@dataclass(frozen=True)
class BoundsRegistry:
    """Explicit entries per progression length, then the generic range for m >= ``generic_from``."""
    entries: Dict[int, BoundEntry] = field(default_factory=dict)
    generic_from: Optional[int] = 5

    def lookup(self, m: int) -> BoundEntry:
        if m in self.entries:
            return self.entries[m]
        if self.generic_from is not None and m >= self.generic_from:
            floor = max((entry.lower for length, entry in self.entries.items() if length < m), default=Fraction(0))
            return BoundEntry(floor, 1 - Fraction(1, m),
                              ("monotone in the progression length", "random construction, 1 - 1/m"))
        raise RegistryMiss(f"no bounds recorded for {m}-term progressions", {"m": m})

    def dump(self) -> dict:
        return {"entries": {str(m): entry.dump() for m, entry in sorted(self.entries.items())},
                "generic_from": self.generic_from}


def default_registry() -> BoundsRegistry:
    return BoundsRegistry({
        2: BoundEntry(Fraction(1, 2), Fraction(1, 2),
                      ("sumset lower bound", "powers-of-two cover, square-root growth")),
        3: BoundEntry(Fraction(6, 11), Fraction(3, 4),
                      ("three-term sum-difference inequality, exponent 6/11",
                       "cited construction: squares centred on the unit square, dimension 7/4")),
        4: BoundEntry(Fraction(4, 7), Fraction(3, 4),
                      ("external four-term sum-difference inequality, exponent 4/7",
                       "cited construction: squares centred on the unit square, dimension 7/4")),
    })


@dataclass(frozen=True)
class DimensionBounds:
    kind: BoundKind
    n: int
    m: int
    lo: Fraction
    hi: Fraction
    provenance: Tuple[str, ...]
    trivial: bool = False
    residual: Tuple[int, ...] = ()

    def __post_init__(self):
        if not self.n - 1 <= self.lo <= self.hi <= self.n:
            raise AssertionError(f"bounds [{self.lo}, {self.hi}] leave [{self.n - 1}, {self.n}]")

    def dump(self) -> dict:
        return {"kind": self.kind.value, "n": self.n, "m": self.m, "lo": str(self.lo), "hi": str(self.hi),
                "lo_float": float(self.lo), "hi_float": float(self.hi), "provenance": list(self.provenance),
                "trivial": self.trivial, "residual_faces": list(self.residual)}


def dimension_bounds(polytope: PolytopeSpec, registry: Optional[BoundsRegistry] = None,
                     kind: BoundKind = BoundKind.SEGMENT,
                     line_direction: Optional[Sequence] = None) -> DimensionBounds:
    """Interval for the least dimension of a set holding a homothet of ``polytope`` at every centre.

    For centres on a segment the interval is n - 1 + [f(m)] from the registry, where m is the
    harmonic progression length. Faces outside the progression keep the lower bound but lose the
    upper one. For centres filling the unit cube the interval is [n - 1/(n + 1), n - 1/m] with m
    the number of faces.
    """
    registry = registry or default_registry()
    n = polytope.n
    if BoundKind(kind) == BoundKind.CUBE:
        m = polytope.m
        return DimensionBounds(BoundKind.CUBE, n, m, n - Fraction(1, n + 1), n - Fraction(1, m),
                               ("edge-line projection lower bound, n - 1 + dim S/(n + 1) with dim S = n",
                                "cited construction: random set meeting every line family, n - 1/m"))
    family = harmonic_index_extract(polytope, line_direction)
    try:
        entry = registry.lookup(family.m)
    except RegistryMiss as e:
        logger.warning(f"{e.message}; falling back to the trivial interval [{n - 1}, {n}]")
        return DimensionBounds(BoundKind.SEGMENT, n, family.m, Fraction(n - 1), Fraction(n),
                               ("trivial bounds, registry miss",), trivial=True, residual=family.residual)
    hi, provenance = n - 1 + entry.upper, entry.provenance
    if family.residual:
        hi = Fraction(n)
        provenance = provenance[:1] + ("faces outside the progression: trivial upper bound",)
    return DimensionBounds(BoundKind.SEGMENT, n, family.m, n - 1 + entry.lower, hi, provenance,
                           residual=family.residual)
