# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional
import typer
import system as app_system
from commands.common import GlobalOptions
from modules.system.click import exit_code_epilog


@app_system.runtime.cli.callback(options_metavar="[options]", epilog=exit_code_epilog())
def main(
    seed: Optional[int] = typer.Option(None, "--seed", metavar="int", help="Seed every random stream derives from."),
    budget: Optional[float] = typer.Option(None, "--budget", metavar="seconds", help="Wall clock search budget."),
    nodes: Optional[int] = typer.Option(None, "--nodes", metavar="int", help="Search node budget."),
    strict: bool = typer.Option(False, "--strict", help="Fail instead of reporting an uncertified incumbent."),
    cache: Optional[Path] = typer.Option(None, "--cache", metavar="path", help="Result cache file."),
    no_cache: bool = typer.Option(False, "--no-cache", help="Neither read nor write the result cache.")
):
    """
    Arithmetic Kakeya workbench: exact pattern covers, constructions and dimension estimates.
    """
    solver = app_system.settings.solver
    app_system.runtime.options = GlobalOptions(
        seed=app_system.settings.random.seed if seed is None else seed,
        seconds=solver.seconds if budget is None else budget,
        nodes=solver.nodes if nodes is None else nodes,
        strict=strict or solver.strict,
        cache=cache,
        use_cache=not no_cache)


import commands.solve  # noqa: E402 pylint: disable=C0413
import commands.construct  # noqa: E402 pylint: disable=C0413
import commands.qr  # noqa: E402 pylint: disable=C0413
import commands.fields  # noqa: E402 pylint: disable=C0413
import commands.fractal  # noqa: E402 pylint: disable=C0413
import commands.geometry  # noqa: E402 pylint: disable=C0413
import commands.cache  # noqa: E402 pylint: disable=C0413
import commands.system  # noqa: E402 pylint: disable=C0413
