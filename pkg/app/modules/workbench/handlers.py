# -*- coding: utf-8 -*-
"""Workbench commands: what each one computes, records and tabulates.

A handler turns validated parameters into a JSON-ready outputs dict. Tables are derived from
the outputs alone, so a cached record renders the same CSV and SVG as a fresh run.
"""
import json
from pathlib import Path
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple
from modules.constructions import (
    amplify, powers_of_two_cover, projection_system_from_json, random_translate_cover, tower
)
from modules.errors import ConfigInvalid, InvalidCover
from modules.fields import ff_min_cover, ff_translate_cover, lift_cover, product_cover
from modules.fractal import (
    DigitSystem, attractor_dimension, box_count_estimate, build_truncation, moran_dimension, open_set_condition
)
from modules.geometry import (
    BoundKind, Cube, dimension_bounds, diamond, direction_from_slope, harmonic_index_extract, harmonic_polygon,
    hausdorff_to_circle, line_family_setup, polytope_from_json, simplex, square, vertices
)
from modules.geometry.polytope import PolytopeSpec
from modules.patterns import IntRange, ScaleRange, parse_family
from modules.qr import attractor_handoff, build_qr_cover, exponent_table, power_extend, qr_family, qr_params
from modules.qr import rotated_polygon_cover
from modules.reports import PlotKind, Table
from modules.solver import (
    ORACLE_CAP, Budget, Quantity, Windows, brute_force_oracle, exponent_curve, lower_bound_instance, make_problem,
    solve_min_cover, window_sweep
)


@dataclass(frozen=True)
class Job:
    parameters: Dict[str, Any]
    seed: int
    budget: Budget

    def get(self, name: str, default: Any = None) -> Any:
        value = self.parameters.get(name)
        return default if value is None else value

    def require(self, name: str) -> Any:
        value = self.parameters.get(name)
        if value is None:
            raise ConfigInvalid(f"parameter '{name}' is required")
        return value


@dataclass(frozen=True)
class Handler:
    command: str
    module: str
    anchor: str
    compute: Callable[[Job], dict]
    table: Optional[Callable[[dict], Table]] = None
    plot: Optional[PlotKind] = None
    axes: Tuple[Optional[str], Optional[str]] = (None, None)
    budgeted: bool = False


HANDLERS: Dict[str, Handler] = {}


def handler(command: str, module: str, anchor: str, table: Optional[Callable[[dict], Table]] = None,
            plot: Optional[PlotKind] = None, axes: Tuple[Optional[str], Optional[str]] = (None, None),
            budgeted: bool = False):
    def decorate(compute: Callable[[Job], dict]):
        HANDLERS[command] = Handler(command, module, anchor, compute, table, plot, axes, budgeted)
        return compute
    return decorate


def choice(kind, value: Any):
    try:
        return kind(value)
    except ValueError as ex:
        raise ConfigInvalid(f"'{value}' is not one of {[member.value for member in kind]}") from ex


def integers(value: Any) -> List[int]:
    """``1,2,3`` or a list; ``lo..hi`` expands to the closed range."""
    if isinstance(value, (list, tuple)):
        return [int(v) for v in value]
    text = str(value).strip()
    if ".." in text:
        return list(IntRange.parse(text))
    try:
        return [int(token) for token in text.strip("{}[]").split(",") if token.strip()]
    except ValueError as ex:
        raise ConfigInvalid(f"expected comma separated integers, got '{value}'") from ex


def vectors(value: Any) -> list:
    """Plain integers, or JSON lists of coordinate lists for vector families and digits."""
    if isinstance(value, (list, tuple)):
        return [tuple(v) if isinstance(v, (list, tuple)) else v for v in value]
    text = str(value).strip()
    if text.startswith("[["):
        try:
            return [tuple(v) for v in json.loads(text)]
        except (json.JSONDecodeError, TypeError) as ex:
            raise ConfigInvalid(f"malformed vector list '{text}'") from ex
    return integers(text)


def document(value: Any) -> Any:
    """Inline JSON or a path to a JSON file."""
    if isinstance(value, dict):
        return value
    text = str(value).strip()
    if not text.startswith("{"):
        path = Path(text)
        if not path.is_file():
            raise ConfigInvalid(f"'{text}' is neither JSON nor a readable file")
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        raise ConfigInvalid(f"malformed JSON: {ex}") from ex


# cover-solver

def _windows(job: Job) -> Windows:
    positive = bool(job.get("positive", False))
    window, points = job.get("window"), job.get("points")
    return Windows(ScaleRange.parse(str(job.get("scales", "-10..10")), positive),
                   IntRange.parse(str(window)) if window else None,
                   IntRange.parse(str(points)) if points else None)


@handler("solve", "cover-solver", "windowed exact minimum pattern cover", budgeted=True)
def solve(job: Job) -> dict:
    family = parse_family(str(job.require("family")))
    problem = make_problem(choice(Quantity, job.get("mode", "g-prime")), family, int(job.require("n")), _windows(job))
    solution = solve_min_cover(problem, job.budget)
    outputs = {"size": solution.size, "problem": problem.dump(), "problem_digest": problem.digest(),
               "solution": solution.dump()}
    if job.get("oracle", False):
        oracle = brute_force_oracle(problem, int(job.get("oracle_cap", ORACLE_CAP)))
        if oracle.size != solution.size:
            raise InvalidCover(f"search found {solution.size}, exhaustive oracle {oracle.size}",
                               {"oracle": oracle.dump()})
        outputs["oracle_size"] = oracle.size
    if job.get("katz_tao", False):
        outputs["katz_tao"] = lower_bound_instance(family, solution).dump()
    return outputs


def _curve_table(outputs: dict) -> Table:
    return Table.of(outputs["rows"], ["n", "size", "exponent", "certified", "partial"], outputs["quantity"])


@handler("solve:curve", "cover-solver", "exponent log size / log N of windowed minima",
         table=_curve_table, plot=PlotKind.EXPONENT_CURVE, axes=("n", "exponent"), budgeted=True)
def solve_curve(job: Job) -> dict:
    family = parse_family(str(job.require("family")))
    quantity = choice(Quantity, job.get("mode", "g-prime"))
    table = exponent_curve(quantity, family, integers(job.require("ns")), _windows(job), job.budget)
    return table.dump()


def _sweep_table(outputs: dict) -> Table:
    return Table.of(outputs["rows"], ["radius", "size", "certified", "error"])


@handler("solve:sweep", "cover-solver", "window sweep of a windowed minimum", table=_sweep_table, budgeted=True)
def solve_sweep(job: Job) -> dict:
    family = parse_family(str(job.require("family")))
    rows = window_sweep(choice(Quantity, job.get("mode", "g-prime")), family, int(job.require("n")),
                        integers(job.require("radii")), bool(job.get("positive", False)), job.budget)
    return {"family": family.dump(), "n": int(job.require("n")), "rows": [row.dump() for row in rows]}


# constructions

def _tower_table(outputs: dict) -> Table:
    return Table.of([{"level": level["level"], "B": level["stats"]["B"], "S": level["stats"]["S"]}
                     for level in outputs["levels"]])


@handler("construct:tower", "constructions", "self-similar tower |B| = k^l, |S| = l k^(l-1)", table=_tower_table)
def construct_tower(job: Job) -> dict:
    states = tower(int(job.require("k")), int(job.require("levels")))
    for state in states:
        state.verify()
    return {"k": int(job.require("k")), "levels": [state.dump() for state in states]}


@handler("construct:powers", "constructions", "powers of two carry {1,2} patterns at m^2 - 2m + 2 basepoints")
def construct_powers(job: Job) -> dict:
    cover = powers_of_two_cover(int(job.require("m")))
    if len(cover.covered) < cover.expected:
        raise InvalidCover(f"{len(cover.covered)} basepoints covered, expected {cover.expected}")
    return {**cover.dump(), "expected": cover.expected}


@handler("construct:translates", "constructions", "translate cover of an interval within 4 (X/|S|) log X")
def construct_translates(job: Job) -> dict:
    cover = random_translate_cover(integers(job.require("shape")), int(job.require("x")), job.seed,
                                   bool(job.get("randomized", False)))
    return {"shape": integers(job.require("shape")), "x": int(job.require("x")), **cover.dump()}


@handler("construct:amplify", "constructions", "tensor-power amplification of a projection counterexample")
def construct_amplify(job: Job) -> dict:
    system = projection_system_from_json(document(job.require("system")))
    hypothesis = job.get("hypothesis")
    result = amplify(system, Fraction(str(job.get("epsilon", "1/2"))), int(job.get("m", 2)),
                     None if hypothesis is None else [s for s in str(hypothesis).split(",") if s.strip()],
                     int(job.get("power")) if job.get("power") else None)
    return {"system": system.dump(), "sizes": system.sizes(), "amplified": result.dump()}


# qr-construction

def _exponent_rows(outputs: dict) -> Table:
    return Table.of(outputs["exponents"], ["q", "N", "size_bound", "exponent"])


@handler("qr:build", "qr-construction", "quadratic-residue scales r(x) with residues pi_i(x)^2",
         table=_exponent_rows, plot=PlotKind.EXPONENT_CURVE, axes=("q", "exponent"))
def qr_build(job: Job) -> dict:
    n = int(job.get("n", 2))
    family = qr_family(n, vectors(job.require("family")))
    primes = job.get("primes")
    params = qr_params(n, family, integers(primes) if primes else None)
    cover = build_qr_cover(params, strict=bool(job.get("strict", False)))
    outputs = {"cover": cover.dump(), "exponents": [row.dump() for row in exponent_table(
        cover.size, params.Q, int(job.get("n_target", params.Q ** 3)))]}
    power = job.get("power")
    if power:
        extension = power_extend(cover.points, family, params.Q, int(power), cover.witnesses, job.seed)
        outputs["power"] = extension.dump()
    if job.get("handoff", False):
        outputs["handoff"] = attractor_handoff(cover.points, params.Q).dump()
    return outputs


@handler("qr:polygon", "qr-construction", "rotated lattice polygons over the Gaussian integers",
         table=_exponent_rows, plot=PlotKind.EXPONENT_CURVE, axes=("q", "exponent"))
def qr_polygon(job: Job) -> dict:
    primes = job.get("primes")
    result = rotated_polygon_cover(int(job.require("k")), job.get("n_target"),
                                   integers(primes) if primes else None, job.get("radius"))
    return result.dump()


# finite-field

@handler("ff:solve", "finite-field", "exact minimum cover over F_p^n and its product, lift and translates",
         budgeted=True)
def ff_solve(job: Job) -> dict:
    p, n = int(job.require("p")), int(job.get("n", 1))
    cover = ff_min_cover(p, n, integers(job.require("family")), budget=job.budget)
    outputs = {"cover": cover.dump(), "size": cover.size}
    target = job.get("product")
    if target:
        product = product_cover(cover, int(target))
        outputs["product"] = {**product.dump(), "verified": product.verify()}
    epsilon = job.get("epsilon")
    if epsilon:
        outputs["lift"] = lift_cover(cover, Fraction(str(epsilon))).dump()
    if job.get("translates", False):
        outputs["translates"] = ff_translate_cover(cover).dump()
    return outputs


# fractal-dim

def _box_table(outputs: dict) -> Table:
    rows = [{**row, "scale": outputs["system"]["base"] ** row["j"], "slope": outputs["box_count"]["slope"]}
            for row in outputs["box_count"]["counts"]]
    return Table.of(rows, ["j", "scale", "count", "slope"])


@handler("fractal:dim", "fractal-dim", "digit attractor dimension: Moran value and box counting",
         table=_box_table, plot=PlotKind.LOG_LOG, axes=("scale", "count"))
def fractal_dim(job: Job) -> dict:
    system = DigitSystem.of(int(job.require("base")), vectors(job.require("digits")), int(job.get("depth", 6)),
                            bool(job.get("carries", False)))
    levels = job.get("levels")
    estimate = box_count_estimate(build_truncation(system), integers(levels) if levels else None)
    outputs = {"system": system.dump(), "open_set_condition": open_set_condition(system),
               "moran": attractor_dimension(system), "box_count": estimate.dump(),
               "gap": abs(estimate.slope - attractor_dimension(system))}
    ratios = job.get("ratios")
    if ratios:
        outputs["moran_ratios"] = moran_dimension([Fraction(r) for r in str(ratios).split(",")], system.dim)
    return outputs


# geometry

def polytope_of(value: Any) -> PolytopeSpec:
    """``square``, ``diamond``, ``simplex:N``, ``harmonic:K`` or a polytope JSON document."""
    text = str(value).strip()
    name, _, argument = text.partition(":")
    if name == "square":
        return square()
    if name == "diamond":
        return diamond()
    if name == "simplex":
        return simplex(int(argument or 2))
    if name == "harmonic":
        return harmonic_polygon(int(argument or 1)).polytope
    return polytope_from_json(document(value))


@handler("geom:bounds", "geometry", "dimension interval n - 1 + f(m) from the harmonic face progression")
def geom_bounds(job: Job) -> dict:
    shape = polytope_of(job.require("polytope"))
    kind = choice(BoundKind, job.get("kind", "h"))
    slope = job.get("slope")
    direction = direction_from_slope(slope) if slope is not None and shape.n == 2 else None
    outputs = {"polytope": shape.dump()}
    if kind == BoundKind.SEGMENT:
        outputs["harmonic"] = harmonic_index_extract(shape, direction).dump()
    outputs["bounds"] = dimension_bounds(shape, kind=kind, line_direction=direction).dump()
    return outputs


@handler("geom:lines", "geometry", "line family V_x avoiding the diagonals beyond delta")
def geom_lines(job: Job) -> dict:
    shape = polytope_of(job.require("polytope"))
    centre = [Fraction(c.strip()) for c in str(job.require("centre")).split(",")]
    cube = Cube(tuple(centre), Fraction(str(job.get("half_width", "1/2"))))
    family = line_family_setup(shape, cube)
    outputs = family.dump()
    samples = int(job.get("samples", 0))
    if samples:
        outputs["resampled"] = {"count": samples, "failures": family.resample(samples, job.seed)}
    return outputs


def _polygon_table(outputs: dict) -> Table:
    rows = [{"polygon": f"P_{entry['k']}", "x": x, "y": y}
            for entry in outputs["polygons"] for x, y in entry["vertices"]]
    return Table.of(rows, ["polygon", "x", "y"])


@handler("geom:polygons", "geometry", "harmonic polygons P_k converge to the unit circle",
         table=_polygon_table, plot=PlotKind.POLYGON_VS_CIRCLE)
def geom_polygons(job: Job) -> dict:
    entries = []
    for k in integers(job.get("ks", "1,2,4")):
        polygon = harmonic_polygon(k)
        corners = vertices(polygon.polytope)
        distance = hausdorff_to_circle(polygon.polytope)
        progression = harmonic_index_extract(polygon.polytope).m
        entries.append({"k": k, "faces": polygon.polytope.m, "progression": progression,
                        "hausdorff": str(distance), "hausdorff_float": float(distance),
                        "vertices": [[float(x), float(y)] for x, y in corners]})
    return {"polygons": entries}
