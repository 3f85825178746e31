# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional
import typer
import system
from commands.common import CSV, JSON, dispatch, guarded


@system.runtime.cli.command(name="construct:tower", options_metavar="[options]")
@guarded
def tower(
    k: int = typer.Option(3, "--k", help="Progression length."),
    levels: int = typer.Option(4, "--levels", help="Number of tower levels."),
    json_path: Optional[Path] = JSON, csv_path: Optional[Path] = CSV
):
    """
    Self-similar tower of [k] patterns, re-verified level by level.
    """
    return dispatch("construct:tower", {"k": k, "levels": levels}, json_path, csv_path)


@system.runtime.cli.command(name="construct:powers", options_metavar="[options]")
@guarded
def powers(
    m: int = typer.Option(8, "--m", help="Number of powers of two."),
    json_path: Optional[Path] = JSON
):
    """
    Basepoints carrying {1,2} patterns in {1, 2, ..., 2^(m-1)}.
    """
    return dispatch("construct:powers", {"m": m}, json_path)


@system.runtime.cli.command(name="construct:translates", options_metavar="[options]")
@guarded
def translates(
    shape: str = typer.Option(..., "--shape", metavar="list", help="The set S to translate."),
    x: int = typer.Option(..., "--x", metavar="X", help="Cover {1, ..., X}."),
    randomized: bool = typer.Option(False, "--randomized", help="Random translates instead of greedy."),
    json_path: Optional[Path] = JSON
):
    """
    Translates T with S + T covering an interval.
    """
    return dispatch("construct:translates", {"shape": shape, "x": x, "randomized": randomized}, json_path)


@system.runtime.cli.command(name="construct:amplify", options_metavar="[options]")
@guarded
def amplify(
    system_json: str = typer.Option(..., "--system", metavar="json|path", help="Points and slopes."),
    epsilon: str = typer.Option("1/2", "--epsilon", metavar="p/q", help="Hypothesis exponent margin."),
    m: int = typer.Option(2, "--m", metavar="M", help="Target amplification factor."),
    hypothesis: Optional[str] = typer.Option(None, "--hypothesis", metavar="slopes", help="Slopes S, all by default."),
    power: Optional[int] = typer.Option(None, "--power", metavar="n", help="Force the tensor power."),
    json_path: Optional[Path] = JSON
):
    """
    Tensor-power a projection counterexample until it beats the factor M.
    """
    return dispatch("construct:amplify", {"system": system_json, "epsilon": epsilon, "m": m,
                                          "hypothesis": hypothesis, "power": power}, json_path)
