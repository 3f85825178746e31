# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional
import typer
import system
from commands.common import CSV, JSON, SVG, dispatch, guarded

POLYTOPE = typer.Option(..., "--polytope", metavar="shape",
                        help="square, diamond, simplex:N, harmonic:K, or JSON hyperplanes.")


@system.runtime.cli.command(name="geom:bounds", options_metavar="[options]")
@guarded
def bounds(
    polytope: str = POLYTOPE,
    kind: str = typer.Option("h", "--kind", metavar="h|g", help="Centres on a segment (h) or in a cube (g)."),
    slope: Optional[str] = typer.Option(None, "--slope", metavar="s", help="Slope of the centre line."),
    json_path: Optional[Path] = JSON
):
    """
    Dimension interval for sets holding a homothet at every centre.
    """
    return dispatch("geom:bounds", {"polytope": polytope, "kind": kind, "slope": slope}, json_path)


@system.runtime.cli.command(name="geom:lines", options_metavar="[options]")
@guarded
def lines(
    polytope: str = POLYTOPE,
    centre: str = typer.Option(..., "--centre", metavar="x,y", help="Cube centre."),
    half_width: str = typer.Option("1/2", "--half-width", metavar="h", help="Cube half width."),
    samples: int = typer.Option(0, "--samples", help="Rational points to re-check."),
    json_path: Optional[Path] = JSON
):
    """
    Bad hyperplanes and the threshold delta of a line family over a cube.
    """
    return dispatch("geom:lines", {"polytope": polytope, "centre": centre, "half_width": half_width,
                                   "samples": samples}, json_path)


@system.runtime.cli.command(name="geom:polygons", options_metavar="[options]")
@guarded
def polygons(
    ks: str = typer.Option("1,2,4", "--ks", metavar="list", help="Polygon indices k."),
    json_path: Optional[Path] = JSON, csv_path: Optional[Path] = CSV, svg_path: Optional[Path] = SVG
):
    """
    Harmonic polygons P_k against the unit circle.
    """
    return dispatch("geom:polygons", {"ks": ks}, json_path, csv_path, svg_path)
