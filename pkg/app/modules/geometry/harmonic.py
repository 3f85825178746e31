# -*- coding: utf-8 -*-
"""Harmonic faces: reading a progression length off a polytope.

A face (u, d) sits in slot j = <u, w>/(|w| d) for the unit direction w of the centre line. Faces
sharing a slot count once, and when the distinct slots form an arithmetic progression J of length
m, homothets centred along the line behave like m-term progressions in the line.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple
import sympy as sp
from loguru import logger
from modules.errors import ConfigInvalid, NoHarmonicFamily
from modules.geometry.polytope import PolytopeSpec, coordinate_text, is_zero, parse_coordinate


@dataclass(frozen=True)
class HarmonicFamily:
    """Slots in increasing order, the faces in each slot, and the faces outside the progression.

    ``start`` and ``step`` record the affine normalization slot = start + (i - 1) * step onto
    indices i = 1..m.
    """
    slots: Tuple[sp.Expr, ...]
    faces: Dict[int, Tuple[int, ...]]
    residual: Tuple[int, ...]
    start: sp.Expr
    step: sp.Expr
    direction: Tuple[sp.Expr, ...] = field(default=())

    @property
    def m(self) -> int:
        return len(self.slots)

    def dump(self) -> dict:
        return {"m": self.m, "J": [coordinate_text(slot) for slot in self.slots],
                "normalization": {"start": coordinate_text(self.start), "step": coordinate_text(self.step)},
                "faces": {str(i): list(faces) for i, faces in sorted(self.faces.items())},
                "residual": list(self.residual),
                "direction": [coordinate_text(c) for c in self.direction]}


def face_slots(polytope: PolytopeSpec, line_direction: Optional[Sequence] = None) -> List[sp.Expr]:
    """Slot value <u, w>/(|w| d) of every face; ``w`` defaults to the first axis."""
    direction = _direction(polytope.n, line_direction)
    norm = sp.sqrt(sum(c ** 2 for c in direction))
    return [sp.radsimp(plane.value(direction) / (norm * plane.d)) for plane in polytope.hyperplanes]


def harmonic_index_extract(polytope: PolytopeSpec,
                           line_direction: Optional[Sequence] = None) -> HarmonicFamily:
    """Longest arithmetic progression among the distinct face slots.

    Slot differences are compared exactly. Faces whose slot falls outside the progression are
    returned as residual.

    :raises NoHarmonicFamily: fewer than two slots line up.
    """
    direction = _direction(polytope.n, line_direction)
    values = face_slots(polytope, direction)
    distinct: List[sp.Expr] = []
    for value in sorted(values, key=float):
        if not distinct or not _same(value, distinct[-1]):
            distinct.append(value)
    best: List[int] = [0] if distinct else []
    for i, first in enumerate(distinct):
        for j in range(i + 1, len(distinct)):
            step = distinct[j] - first
            run, last = [i, j], j
            for following in range(j + 1, len(distinct)):
                if _same(distinct[following] - distinct[last], step):
                    run.append(following)
                    last = following
            if len(run) > len(best):
                best = run
    if len(best) < 2:
        raise NoHarmonicFamily(f"{polytope.name} has no two face slots to form a progression",
                               {"slots": [coordinate_text(v) for v in distinct]})
    slots = tuple(distinct[i] for i in best)
    start, step = slots[0], sp.radsimp(slots[1] - slots[0])
    grouped: Dict[int, List[int]] = {}
    residual = []
    for face, value in enumerate(values):
        match = next((index for index, slot in enumerate(slots, start=1) if _same(value, slot)), None)
        if match is None:
            residual.append(face)
        else:
            grouped.setdefault(match, []).append(face)
    if residual:
        logger.warning(f"{polytope.name}: faces {residual} fall outside the {len(slots)}-term slot progression")
    logger.debug(f"{polytope.name}: slots {[str(s) for s in slots]} along {[str(c) for c in direction]}")
    return HarmonicFamily(slots, {i: tuple(faces) for i, faces in grouped.items()}, tuple(residual),
                          start, step, direction)


def _same(a: sp.Expr, b: sp.Expr) -> bool:
    # numeric screen before the exact check
    return abs(float(a - b)) < 1e-9 and is_zero(a - b)


def _direction(n: int, line_direction: Optional[Sequence]) -> Tuple[sp.Expr, ...]:
    if line_direction is None:
        return tuple(sp.Integer(1 if i == 0 else 0) for i in range(n))
    direction = tuple(parse_coordinate(c) if not isinstance(c, sp.Expr) else c for c in line_direction)
    if len(direction) != n:
        raise ConfigInvalid(f"line direction has {len(direction)} coordinates, expected {n}")
    if all(is_zero(c) for c in direction):
        raise ConfigInvalid("line direction must be nonzero")
    return direction
