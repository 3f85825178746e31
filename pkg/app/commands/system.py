# -*- coding: utf-8 -*-
import os
import time
import typer
import system


@system.runtime.cli.command(name="system:cleanup", options_metavar="[options]")
def cleanup(
    location: str = typer.Argument("output", metavar="location", help="Location name or path."),
    interval: int = typer.Argument(30, metavar="[interval]", help="Older than days interval threshold.")
):
    """
    Remove generated artifacts older than the interval.
    """
    skip = [".empty"]
    root = getattr(system.path, location, location)
    current_time = time.time()
    for dirpath, _, filenames in os.walk(root):
        for file in filenames:
            if file in skip:
                continue
            target = os.path.join(dirpath, file)
            if (current_time - os.path.getmtime(target)) // (24 * 3600) >= interval:
                os.unlink(target)
                typer.secho(f"removed {target}")
