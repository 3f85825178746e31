# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional
import typer
import system
from commands.common import JSON, dispatch, guarded


@system.runtime.cli.command(name="ff:solve", options_metavar="[options]")
@guarded
def solve(
    p: int = typer.Option(..., "--p", help="Field characteristic."),
    n: int = typer.Option(1, "--n", help="Dimension of F_p^n."),
    family: str = typer.Option(..., "--family", metavar="U", help="Integer family, reduced mod p."),
    product: Optional[int] = typer.Option(None, "--product", metavar="n", help="Also build the product cover."),
    epsilon: Optional[str] = typer.Option(None, "--lift", metavar="eps", help="Lift to the integers."),
    translates: bool = typer.Option(False, "--translates", help="Cover F_p^n by translates."),
    json_path: Optional[Path] = JSON
):
    """
    Exact minimum cover over a finite field, with its product, lift and translates.
    """
    return dispatch("ff:solve", {"p": p, "n": n, "family": family, "product": product, "epsilon": epsilon,
                                 "translates": translates}, json_path)
