# -*- coding: utf-8 -*-
"""Quadratic-residue covers S = {x + u (x) r(x)} over every basepoint of [Q - 1]^d.

Modulo a prime q the point x + u x^2 equals u (x + 1/(2u))^2 - 1/(4u), so for fixed u it only
takes (q^d + 1)/2 values. Covering every basepoint therefore costs far fewer than k Q^d points.
"""
import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple
from loguru import logger
from modules.errors import DegenerateScale, TooLarge
from modules.patterns import PatternSet, require_cover
from modules.qr.params import QR_CAP, QRParams, qr_scale


@dataclass(frozen=True)
class ResidueProjection:
    prime: int
    size: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.size <= self.bound

    def dump(self) -> dict:
        return {"prime": self.prime, "size": self.size, "bound": self.bound, "holds": self.holds}


@dataclass(frozen=True)
class QRCover:
    params: QRParams
    points: PatternSet
    witnesses: Dict[tuple, tuple]
    degenerate: Tuple[tuple, ...] = ()
    fallbacks: Tuple[tuple, ...] = ()
    projections: Tuple[ResidueProjection, ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def volume(self) -> int:
        return self.params.Q ** self.params.d

    @property
    def ratio(self) -> float:
        return self.size / self.volume

    @property
    def exponent(self) -> float:
        """log |S| / log Q, the dimension of the attractor built from S."""
        return math.log(self.size) / math.log(self.params.Q)

    def bound_shape(self) -> float:
        """k^2 f_k^d 2^-m Q^d prod(1 + q^-d), the counting bound without its constant."""
        params = self.params
        k, d = params.family.k, params.d
        product = math.prod(1 + q ** -d for q in params.system.primes)
        return k ** 2 * params.f_k ** d * 2.0 ** -params.system.m * self.volume * product

    @property
    def fitted_constant(self) -> float:
        return self.size / self.bound_shape()

    def verify(self):
        require_cover(self.points, self.params.family, self.witnesses.items())

    def dump(self) -> dict:
        return {"params": self.params.dump(), "size": self.size, "Q^d": self.volume, "ratio": self.ratio,
                "exponent": self.exponent, "bound_shape": self.bound_shape(),
                "fitted_constant": self.fitted_constant, "basepoints": len(self.witnesses),
                "degenerate_basepoints": len(self.degenerate), "fallback_scales": len(self.fallbacks),
                "residue_projections": [projection.dump() for projection in self.projections],
                "S": self.points.dump()}


def _basepoints(params: QRParams):
    return itertools.product(range(1, params.Q), repeat=params.d)


def residue_projections(params: QRParams, points: PatternSet) -> List[ResidueProjection]:
    """Size of S modulo each prime against k (q^d + 1)/2 + k."""
    k, d = params.family.k, params.d
    return [ResidueProjection(q, len({tuple(c % q for c in point) for point in points}),
                              k * (q ** d + 1) // 2 + k)
            for q in params.system.primes]


def build_qr_cover(params: QRParams, strict: bool = False, cap: Optional[int] = QR_CAP) -> QRCover:
    """One pattern x + U (x) r(x) per basepoint x of [Q - 1]^d, verified afterwards.

    Basepoints with a residue that vanishes modulo some prime get a zero-divisor scale; they are
    counted, and with ``strict`` they raise. A scale that vanishes outright is replaced by 1.

    :raises DegenerateScale: with ``strict`` and some pi_i(x) = 0.
    :raises TooLarge: more than ``cap`` basepoints.
    """
    ring = params.ring
    if cap is not None and (params.Q - 1) ** params.d > cap:
        raise TooLarge(f"{(params.Q - 1) ** params.d} basepoints exceed the cap {cap}",
                       {"Q": params.Q, "d": params.d})
    points, witnesses, degenerate, fallbacks = set(), {}, [], []
    for x in _basepoints(params):
        if any(all(c % q == 0 for c in x) for q in params.system.primes):
            degenerate.append(x)
        r = qr_scale(x, params.system)
        if not any(r):
            r = ring.cyclotomic_ring.one()
            fallbacks.append(x)
        witnesses[x] = r
        for u in params.family:
            points.add(ring.add(x, ring.scale(r, u)))
    if degenerate and strict:
        raise DegenerateScale(f"{len(degenerate)} basepoints vanish modulo some prime",
                              {"basepoints": [list(x) for x in degenerate[:20]]})
    if fallbacks:
        logger.warning(f"{len(fallbacks)} basepoints fell back to scale 1")
    pattern_set = PatternSet(ring, frozenset(points))
    cover = QRCover(params, pattern_set, witnesses, tuple(degenerate), tuple(fallbacks),
                    tuple(residue_projections(params, pattern_set)))
    cover.verify()
    logger.info(f"QR cover over Q={params.Q}, d={params.d}: |S|={cover.size} against Q^d={cover.volume}")
    return cover
