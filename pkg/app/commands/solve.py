# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional
import typer
import system
from commands.common import CSV, JSON, SVG, dispatch, guarded
from modules.solver import Quantity

MODE = typer.Option(Quantity.G_PRIME, "--mode", help="Extremal quantity the instance measures.")
FAMILY = typer.Option(..., "--family", metavar="U", help="Pattern family: 1,2 or [k] or 1/[k] or JSON.")
SCALES = typer.Option("-10..10", "--scales", metavar="lo..hi", help="Scale window, zero excluded.")
WINDOW = typer.Option(None, "--window", metavar="lo..hi", help="Basepoint window.")
POINTS = typer.Option(None, "--points", metavar="lo..hi", help="Window every cover point must lie in.")
POSITIVE = typer.Option(False, "--positive", help="Positive scales only.")


@system.runtime.cli.command(name="solve", options_metavar="[options]")
@guarded
def solve(
    mode: Quantity = MODE, family: str = FAMILY,
    n: int = typer.Option(..., "--n", metavar="N", help="Demand size N."),
    scales: str = SCALES, window: Optional[str] = WINDOW, points: Optional[str] = POINTS, positive: bool = POSITIVE,
    oracle: bool = typer.Option(False, "--oracle", help="Cross-check against exhaustive enumeration."),
    katz_tao: bool = typer.Option(False, "--katz-tao", help="Wire the cover into a sum-difference instance."),
    json_path: Optional[Path] = JSON
):
    """
    Exact windowed minimum cover for one instance.
    """
    return dispatch("solve", {"mode": mode.value, "family": family, "n": n, "scales": scales, "window": window,
                              "points": points, "positive": positive, "oracle": oracle, "katz_tao": katz_tao,
                              "oracle_cap": system.settings.solver.oracle_cap if oracle else None},
                    json_path)


@system.runtime.cli.command(name="solve:curve", options_metavar="[options]")
@guarded
def curve(
    mode: Quantity = MODE, family: str = FAMILY,
    ns: str = typer.Option(..., "--ns", metavar="lo..hi", help="Values of N, a range or a list."),
    scales: str = SCALES, window: Optional[str] = WINDOW, points: Optional[str] = POINTS, positive: bool = POSITIVE,
    json_path: Optional[Path] = JSON, csv_path: Optional[Path] = CSV, svg_path: Optional[Path] = SVG
):
    """
    Exponent table log size / log N over a range of N.
    """
    return dispatch("solve:curve", {"mode": mode.value, "family": family, "ns": ns, "scales": scales,
                                    "window": window, "points": points, "positive": positive},
                    json_path, csv_path, svg_path)


@system.runtime.cli.command(name="solve:sweep", options_metavar="[options]")
@guarded
def sweep(
    mode: Quantity = MODE, family: str = FAMILY,
    n: int = typer.Option(..., "--n", metavar="N", help="Demand size N."),
    radii: str = typer.Option("2,4,6", "--radii", metavar="list", help="Window radii R for [-R, R]."),
    positive: bool = POSITIVE,
    json_path: Optional[Path] = JSON, csv_path: Optional[Path] = CSV
):
    """
    Re-solve one instance over growing windows.
    """
    return dispatch("solve:sweep", {"mode": mode.value, "family": family, "n": n, "radii": radii,
                                    "positive": positive}, json_path, csv_path)
