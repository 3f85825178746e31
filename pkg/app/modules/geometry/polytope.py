# -*- coding: utf-8 -*-
"""Convex polytopes given by their bounding hyperplanes {x : <x, u> <= d}.

Coordinates are exact sympy numbers: rationals and signed square roots of rationals, so the unit
norm and every harmonic check stay exact.
"""
import math
import re
from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple
import sympy as sp
from loguru import logger
from modules.errors import ConfigInvalid, DegeneratePolytope

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_SURD = re.compile(r"^\s*([+-]?)\s*sqrt\(\s*(\d+)(?:\s*/\s*(\d+))?\s*\)\s*$")


def is_zero(expr) -> bool:
    expr = sp.sympify(expr)
    if expr.is_Rational:
        return expr == 0
    return sp.simplify(expr) == 0


def sign_of(expr) -> int:
    expr = sp.simplify(sp.sympify(expr))
    if expr == 0:
        return 0
    positive = expr.is_positive
    if positive is None:
        positive = float(expr) > 0
    return 1 if positive else -1


def parse_coordinate(value: Any) -> sp.Expr:
    """``3``, ``"p/q"`` or ``"+-sqrt(p/q)"`` as an exact sympy number."""
    if isinstance(value, bool):
        raise ConfigInvalid(f"'{value}' is not a coordinate")
    if isinstance(value, int):
        return sp.Integer(value)
    if isinstance(value, sp.Expr):
        return value
    text = str(value)
    match = _RATIONAL.match(text)
    if match:
        return sp.Rational(int(match.group(1)), int(match.group(2) or 1))
    match = _SURD.match(text)
    if match:
        root = sp.sqrt(sp.Rational(int(match.group(2)), int(match.group(3) or 1)))
        return -root if match.group(1) == "-" else root
    raise ConfigInvalid(f"'{value}' is neither a rational p/q nor a signed sqrt(p/q)")


def coordinate_text(expr: sp.Expr) -> str:
    """Inverse of :func:`parse_coordinate` for rationals and single surds."""
    expr = sp.nsimplify(expr)
    if expr.is_Rational:
        return str(expr)
    square = sp.nsimplify(expr ** 2)
    if square.is_Rational:
        return f"{'-' if expr.is_negative else ''}sqrt({square})"
    return str(expr)


@dataclass(frozen=True)
class Hyperplane:
    u: Tuple[sp.Expr, ...]
    d: sp.Expr

    def dump(self) -> dict:
        return {"u": [coordinate_text(c) for c in self.u], "d": coordinate_text(self.d)}

    def value(self, x: Sequence) -> sp.Expr:
        return sp.radsimp(sum(sp.sympify(c) * ui for c, ui in zip(x, self.u)))


@dataclass(frozen=True)
class PolytopeSpec:
    n: int
    hyperplanes: Tuple[Hyperplane, ...]
    name: str = "polytope"
    bounded: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ConfigInvalid(f"ambient dimension must be positive, got {self.n}")
        for index, plane in enumerate(self.hyperplanes):
            if len(plane.u) != self.n:
                raise ConfigInvalid(f"face {index} has a normal of length {len(plane.u)}, expected {self.n}")
            if not is_zero(sum(c ** 2 for c in plane.u) - 1):
                raise ConfigInvalid(f"face {index} normal is not a unit vector", {"u": plane.dump()["u"]})
            if sign_of(plane.d) <= 0:
                raise ConfigInvalid(f"face {index} has nonpositive distance {plane.d}")
        if self.bounded:
            self._check_bounded()

    def _check_bounded(self):
        if len(self.hyperplanes) < self.n + 1:
            raise ConfigInvalid(f"a bounded polytope in R^{self.n} needs at least {self.n + 1} faces, "
                                f"got {len(self.hyperplanes)}")
        if self.n == 2:
            angles = sorted(self.angles())
            gaps = [b - a for a, b in zip(angles, angles[1:])] + [angles[0] + 2 * math.pi - angles[-1]]
            if max(gaps) >= math.pi - 1e-12:
                raise ConfigInvalid("face normals leave a half-plane of directions open; the polygon is unbounded")

    @property
    def m(self) -> int:
        return len(self.hyperplanes)

    def angles(self) -> List[float]:
        return [math.atan2(float(plane.u[1]), float(plane.u[0])) % (2 * math.pi) for plane in self.hyperplanes]

    def distinct_normals(self) -> None:
        """:raises DegeneratePolytope: two faces share a normal."""
        for i, first in enumerate(self.hyperplanes):
            for j in range(i + 1, self.m):
                if all(is_zero(a - b) for a, b in zip(first.u, self.hyperplanes[j].u)):
                    raise DegeneratePolytope(f"faces {i} and {j} share the normal {first.dump()['u']}",
                                             {"faces": [i, j]})

    def dump(self) -> dict:
        return {"name": self.name, "n": self.n, "hyperplanes": [plane.dump() for plane in self.hyperplanes]}


def polytope(n: int, faces: Iterable[Tuple[Sequence, Any]], name: str = "polytope",
             bounded: bool = True) -> PolytopeSpec:
    planes = tuple(Hyperplane(tuple(parse_coordinate(c) for c in u), parse_coordinate(d)) for u, d in faces)
    return PolytopeSpec(n, planes, name, bounded)


def polytope_from_json(payload: dict) -> PolytopeSpec:
    """``{n, hyperplanes: [{u: [...], u_tail_norm_sq?: "p/q", tail_sign?: -1, d: "p/q"}]}``.

    With ``u_tail_norm_sq`` the list ``u`` gives the leading coordinates and the last one is the
    signed square root of the given square.
    """
    try:
        n = int(payload["n"])
        faces = []
        for entry in payload["hyperplanes"]:
            u = [parse_coordinate(c) for c in entry["u"]]
            if "u_tail_norm_sq" in entry:
                tail = sp.sqrt(parse_coordinate(entry["u_tail_norm_sq"]))
                u.append(-tail if int(entry.get("tail_sign", 1)) < 0 else tail)
            faces.append((u, entry.get("d", 1)))
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigInvalid(f"malformed polytope description: {e}") from e
    return polytope(n, faces, payload.get("name", "polytope"), bool(payload.get("bounded", True)))


def square() -> PolytopeSpec:
    """Axis-aligned square with inradius 1."""
    return polytope(2, [((1, 0), 1), ((0, 1), 1), ((-1, 0), 1), ((0, -1), 1)], "square")


def diamond() -> PolytopeSpec:
    """The square turned by 45 degrees."""
    root = sp.sqrt(sp.Rational(1, 2))
    faces = [((sx * root, sy * root), 1) for sx in (1, -1) for sy in (1, -1)]
    return polytope(2, faces, "diamond")


def simplex(n: int) -> PolytopeSpec:
    """The n-simplex with faces x_i >= -1 and sum x_i <= sqrt(n)."""
    if n < 1:
        raise ConfigInvalid(f"simplex dimension must be positive, got {n}")
    faces = [(tuple(-1 if j == i else 0 for j in range(n)), 1) for i in range(n)]
    faces.append(((1 / sp.sqrt(n),) * n, 1))
    return polytope(n, faces, f"simplex-{n}")


@dataclass(frozen=True)
class HarmonicPolygon:
    k: int
    polytope: PolytopeSpec
    duplicates: int

    def dump(self) -> dict:
        return {"k": self.k, "faces": self.polytope.m, "duplicates_removed": self.duplicates,
                "hausdorff": float(hausdorff_to_circle(self.polytope)), **self.polytope.dump()}


def harmonic_polygon(k: int, n: int = 2) -> HarmonicPolygon:
    """Faces with normals (j/k, +-sqrt(1 - j^2/k^2)), j in -k..k, all at distance 1.

    At |j| = k both signs give the same face; it is kept once.
    """
    if k < 1:
        raise ConfigInvalid(f"polygon index must be positive, got {k}")
    if n != 2:
        raise ConfigInvalid(f"harmonic polygons are built in the plane only, got n={n}")
    faces, duplicates = [], 0
    for j in range(-k, k + 1):
        first = sp.Rational(j, k)
        tail = sp.sqrt(1 - first ** 2)
        if tail == 0:
            faces.append(((first, 0), 1))
            duplicates += 1
            continue
        faces.extend([((first, tail), 1), ((first, -tail), 1)])
    logger.debug(f"P_{k}: {len(faces)} faces, {duplicates} coincident sign choices merged")
    return HarmonicPolygon(k, polytope(2, faces, f"P_{k}"), duplicates)


def vertices(polygon: PolytopeSpec) -> List[Tuple[sp.Expr, sp.Expr]]:
    """Exact vertices of a bounded polygon, in counterclockwise order of the face normals."""
    if polygon.n != 2:
        raise ConfigInvalid("vertices are computed for polygons only")
    angles = polygon.angles()
    order = sorted(range(polygon.m), key=lambda index: angles[index])
    result = []
    for a, b in zip(order, order[1:] + order[:1]):
        (ax, ay), (bx, by) = polygon.hyperplanes[a].u, polygon.hyperplanes[b].u
        da, db = polygon.hyperplanes[a].d, polygon.hyperplanes[b].d
        det = sp.radsimp(ax * by - ay * bx)
        if det == 0:
            raise DegeneratePolytope(f"adjacent faces {a} and {b} are parallel")
        result.append((sp.radsimp((da * by - db * ay) / det), sp.radsimp((ax * db - bx * da) / det)))
    return result


def hausdorff_to_circle(polygon: PolytopeSpec) -> sp.Expr:
    """sup |h_P - 1| over directions: max(max |v| - 1, 1 - min d), exact."""
    squares = [sp.radsimp(x ** 2 + y ** 2) for x, y in vertices(polygon)]
    outer = sp.sqrt(max(squares, key=float)) - 1
    inner = 1 - min((plane.d for plane in polygon.hyperplanes), key=float)
    return outer if float(outer) >= float(inner) else sp.sympify(inner)


def direction_from_slope(slope: Optional[Any]) -> Tuple[sp.Expr, sp.Expr]:
    """Direction (1, s) of a line of slope s; ``None`` is the vertical line."""
    if slope is None:
        return sp.Integer(0), sp.Integer(1)
    return sp.Integer(1), parse_coordinate(slope)
