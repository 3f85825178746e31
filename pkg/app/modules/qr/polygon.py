# -*- coding: utf-8 -*-
"""Scaled and rotated lattice polygons through the Gaussian-integer construction.

Over Z[i] the product r (x) u is complex multiplication, so every pattern x + r (x) U is a
scaled and rotated copy of the polygon U.
"""
import cmath
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
from loguru import logger
from modules.errors import ConfigInvalid
from modules.qr.cover import QRCover, build_qr_cover
from modules.qr.params import QR_CAP, qr_family, qr_params
from modules.qr.power import ExponentRow, exponent_table

MAX_RADIUS = 1_000


def _round(value: float) -> int:
    return math.floor(value + 0.5)


def _strictly_convex(vertices: Sequence[Tuple[int, int]]) -> bool:
    count = len(vertices)
    for i in range(count):
        (ax, ay), (bx, by), (cx, cy) = vertices[i], vertices[(i + 1) % count], vertices[(i + 2) % count]
        if (bx - ax) * (cy - by) - (by - ay) * (cx - bx) <= 0:
            return False
    return True


@dataclass(frozen=True)
class LatticePolygon:
    k: int
    radius: int
    vertices: Tuple[Tuple[int, int], ...]
    distortion: float

    def dump(self) -> dict:
        return {"k": self.k, "radius": self.radius, "vertices": [list(v) for v in self.vertices],
                "distortion": self.distortion}


def lattice_polygon(k: int, radius: Optional[int] = None) -> LatticePolygon:
    """Round R e^(2 pi i j / k) to the nearest Gaussian integers.

    Without a radius the least R >= 1 giving k distinct vertices in strictly convex position is
    used. Distortion is the largest vertex displacement relative to R.
    """
    if k < 3:
        raise ConfigInvalid(f"a polygon needs at least 3 vertices, got {k}")
    candidates = [radius] if radius else range(1, MAX_RADIUS + 1)
    for r in candidates:
        exact = [r * cmath.exp(2j * math.pi * j / k) for j in range(k)]
        vertices = tuple((_round(z.real), _round(z.imag)) for z in exact)
        if len(set(vertices)) == k and _strictly_convex(vertices):
            distortion = max(abs(complex(*v) - z) for v, z in zip(vertices, exact)) / r
            logger.debug(f"lattice {k}-gon at radius {r}, distortion {distortion:.4f}")
            return LatticePolygon(k, r, vertices, distortion)
    raise ConfigInvalid(f"no radius up to {candidates[-1]} rounds to a convex lattice {k}-gon")


@dataclass(frozen=True)
class PolygonCover:
    polygon: LatticePolygon
    cover: QRCover
    table: List[ExponentRow]

    def dump(self) -> dict:
        return {"polygon": self.polygon.dump(), "cover": {k: v for k, v in self.cover.dump().items() if k != "S"},
                "exponents": [row.dump() for row in self.table]}


def rotated_polygon_cover(k: int, n_target: Optional[int] = None, primes: Optional[Sequence[int]] = None,
                          radius: Optional[int] = None, cap: int = QR_CAP) -> PolygonCover:
    """QR cover of the lattice k-gon over Z[i], with the exponent table of its base-Q powers up to N."""
    polygon = lattice_polygon(k, radius)
    family = qr_family(4, polygon.vertices, strict_coordinates=False)
    params = qr_params(4, family, primes, cap)
    cover = build_qr_cover(params, cap=cap)
    table = exponent_table(cover.size, params.Q, n_target or params.Q)
    return PolygonCover(polygon, cover, table)
