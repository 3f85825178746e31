# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional
import typer
import system
from commands.common import CSV, JSON, SVG, dispatch, guarded

PRIMES = typer.Option(None, "--primes", metavar="list", help="Explicit prime system.")
TARGET = typer.Option(None, "--n-target", metavar="N", help="Tabulate powers up to this N.")


@system.runtime.cli.command(name="qr:build", options_metavar="[options]")
@guarded
def build(
    n: int = typer.Option(2, "--n", help="Cyclotomic index, 2 or 4."),
    family: str = typer.Option(..., "--family", metavar="U", help="1,2 or [[1,0],[0,1]] for Gaussian integers."),
    primes: Optional[str] = PRIMES, n_target: Optional[int] = TARGET,
    strict: bool = typer.Option(False, "--strict-scales", help="Fail on basepoints vanishing modulo a prime."),
    power: Optional[int] = typer.Option(None, "--power", metavar="q", help="Also build and check A_q."),
    handoff: bool = typer.Option(False, "--handoff", help="Report the digit attractor of the cover."),
    json_path: Optional[Path] = JSON, csv_path: Optional[Path] = CSV, svg_path: Optional[Path] = SVG
):
    """
    Quadratic-residue cover of every basepoint of [Q - 1]^d.
    """
    return dispatch("qr:build", {"n": n, "family": family, "primes": primes, "n_target": n_target,
                                 "strict": strict, "power": power, "handoff": handoff},
                    json_path, csv_path, svg_path)


@system.runtime.cli.command(name="qr:polygon", options_metavar="[options]")
@guarded
def polygon(
    k: int = typer.Option(..., "--k", help="Number of polygon vertices."),
    radius: Optional[int] = typer.Option(None, "--radius", metavar="R", help="Rounding radius."),
    primes: Optional[str] = PRIMES, n_target: Optional[int] = TARGET,
    json_path: Optional[Path] = JSON, csv_path: Optional[Path] = CSV, svg_path: Optional[Path] = SVG
):
    """
    Cover by scaled and rotated copies of a lattice k-gon.
    """
    return dispatch("qr:polygon", {"k": k, "radius": radius, "primes": primes, "n_target": n_target},
                    json_path, csv_path, svg_path)
