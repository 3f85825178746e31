# -*- coding: utf-8 -*-
"""Line families V_x = {x.U + r (d_1, ..., d_m)} and their distance from the diagonals of R^m.

A homothet x + r P meets its faces at heights <x, u_i> + r d_i. Two heights coincide for some
r > delta only on the "bad" hyperplanes <x, u_i - u_j> = 0 of pairs with d_i = d_j, so a cube of
centres avoiding those hyperplanes gives lines whose tails avoid every diagonal x_i = x_j.
"""
import itertools
from fractions import Fraction
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import sympy as sp
from loguru import logger
from modules.constructions.seeds import DEFAULT_SEED, stream
from modules.errors import ConfigInvalid
from modules.geometry.polytope import PolytopeSpec, coordinate_text, is_zero, sign_of

SAMPLE_DENOMINATOR = 1000


@dataclass(frozen=True)
class Cube:
    centre: Tuple[Fraction, ...]
    half_width: Fraction

    def __post_init__(self):
        if self.half_width <= 0:
            raise ConfigInvalid(f"cube half width must be positive, got {self.half_width}")
        object.__setattr__(self, "centre", tuple(Fraction(c) for c in self.centre))
        object.__setattr__(self, "half_width", Fraction(self.half_width))

    @property
    def n(self) -> int:
        return len(self.centre)

    def corners(self) -> List[Tuple[Fraction, ...]]:
        return [tuple(c + s * self.half_width for c, s in zip(self.centre, signs))
                for signs in itertools.product((-1, 1), repeat=self.n)]

    def dump(self) -> dict:
        return {"centre": [str(c) for c in self.centre], "half_width": str(self.half_width)}


@dataclass(frozen=True)
class PairReport:
    i: int
    j: int
    equal_distance: bool
    clear: bool
    threshold: Optional[sp.Expr] = None

    def dump(self) -> dict:
        payload = {"pair": [self.i, self.j], "equal_distance": self.equal_distance, "clear": self.clear}
        if self.threshold is not None:
            payload["threshold"] = coordinate_text(self.threshold)
        return payload


@dataclass(frozen=True)
class LineFamily:
    polytope: PolytopeSpec
    cube: Cube
    pairs: Tuple[PairReport, ...]
    delta: Optional[sp.Expr]

    @property
    def bad_pairs(self) -> List[PairReport]:
        return [pair for pair in self.pairs if pair.equal_distance]

    @property
    def certified(self) -> bool:
        return all(pair.clear for pair in self.bad_pairs)

    def embed(self, x: Sequence) -> Tuple[sp.Expr, ...]:
        """x -> (<x, u_1>, ..., <x, u_m>)."""
        return tuple(plane.value(x) for plane in self.polytope.hyperplanes)

    def point(self, x: Sequence, r) -> Tuple[sp.Expr, ...]:
        """The point of V_x at parameter r."""
        return tuple(sp.radsimp(value + sp.sympify(r) * plane.d)
                     for value, plane in zip(self.embed(x), self.polytope.hyperplanes))

    def tail_avoids_diagonal(self, x: Sequence) -> bool:
        """Exact check that {V_x(r) : r > delta} misses every diagonal."""
        heights = self.embed(x)
        planes = self.polytope.hyperplanes
        for a, b in itertools.combinations(range(len(planes)), 2):
            gap = sp.radsimp(heights[a] - heights[b])
            slope = sp.radsimp(planes[b].d - planes[a].d)
            if is_zero(slope):
                if is_zero(gap):
                    return False
            elif self.delta is None or sign_of(gap / slope - self.delta) > 0:
                return False
        return True

    def resample(self, count: int = 1000, seed: int = DEFAULT_SEED) -> int:
        """Check the tails at ``count`` rational points of the cube; returns how many fail."""
        rng = stream(seed, "geometry.line-family")
        scale = self.cube.half_width / SAMPLE_DENOMINATOR
        failures = 0
        for _ in range(count):
            offsets = rng.integers(-SAMPLE_DENOMINATOR, SAMPLE_DENOMINATOR, size=self.cube.n, endpoint=True)
            x = tuple(c + int(o) * scale for c, o in zip(self.cube.centre, offsets))
            if not self.tail_avoids_diagonal(x):
                failures += 1
        return failures

    def dump(self) -> dict:
        return {"polytope": self.polytope.name, "cube": self.cube.dump(), "certified": self.certified,
                "delta": None if self.delta is None else coordinate_text(self.delta),
                "bad_hyperplanes": [pair.dump() for pair in self.bad_pairs],
                "pairs": [pair.dump() for pair in self.pairs]}


def line_family_setup(polytope: PolytopeSpec, cube: Cube) -> LineFamily:
    """Bad hyperplanes for the equal-distance pairs and the threshold delta for the others.

    Every quantity is linear in x, so its extremes over the cube sit at the corners: a bad
    hyperplane misses the cube when all corners give the same strict sign, and delta is the
    largest crossing parameter <x, u_i - u_j>/(d_j - d_i) over corners and pairs.

    :raises DegeneratePolytope: two faces share a normal.
    """
    if cube.n != polytope.n:
        raise ConfigInvalid(f"cube lives in R^{cube.n}, polytope in R^{polytope.n}")
    polytope.distinct_normals()
    planes = polytope.hyperplanes
    corners = cube.corners()
    pairs, crossings = [], []
    for a, b in itertools.combinations(range(len(planes)), 2):
        normal = tuple(sp.radsimp(p - q) for p, q in zip(planes[a].u, planes[b].u))
        values = [sp.radsimp(sum(sp.sympify(c) * w for c, w in zip(corner, normal))) for corner in corners]
        slope = sp.radsimp(planes[b].d - planes[a].d)
        if is_zero(slope):
            signs = {sign_of(value) for value in values}
            pairs.append(PairReport(a, b, True, signs in ({1}, {-1})))
            continue
        threshold = max((sp.radsimp(value / slope) for value in values), key=float)
        crossings.append(threshold)
        pairs.append(PairReport(a, b, False, True, threshold))
    delta = max(crossings, key=float) if crossings else None
    family = LineFamily(polytope, cube, tuple(pairs), delta)
    if not family.certified:
        logger.warning(f"cube {cube.dump()} meets {sum(not p.clear for p in family.bad_pairs)} bad hyperplanes")
    return family
