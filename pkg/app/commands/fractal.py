# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional
import typer
import system
from commands.common import CSV, JSON, SVG, dispatch, guarded


@system.runtime.cli.command(name="fractal:dim", options_metavar="[options]")
@guarded
def dimension(
    base: int = typer.Option(..., "--base", metavar="N", help="Contraction 1/N."),
    digits: str = typer.Option(..., "--digits", metavar="list", help="0,2,4 or [[0,0],[1,1]]."),
    depth: int = typer.Option(6, "--depth", help="Truncation depth."),
    levels: Optional[str] = typer.Option(None, "--levels", metavar="list", help="Box scales N^-j to fit."),
    carries: bool = typer.Option(False, "--carries", help="Allow digits outside [0, N)."),
    json_path: Optional[Path] = JSON, csv_path: Optional[Path] = CSV, svg_path: Optional[Path] = SVG
):
    """
    Moran dimension and box-counting slope of a digit attractor.
    """
    return dispatch("fractal:dim", {"base": base, "digits": digits, "depth": depth, "levels": levels,
                                    "carries": carries}, json_path, csv_path, svg_path)
