# -*- coding: utf-8 -*-
import functools
from pathlib import Path
from typing import Any, Dict, Optional
import typer
from loguru import logger
from pydantic import BaseModel
import system
from modules.errors import WorkbenchError
from modules.reports import canonical
from modules.workbench import RunConfig, run


class GlobalOptions(BaseModel):
    seed: int
    seconds: float
    nodes: int
    strict: bool = False
    cache: Optional[Path] = None
    use_cache: bool = True


def options() -> GlobalOptions:
    """Flags given before the command, settings defaults otherwise."""
    current = getattr(system.runtime, "options", None)
    if current is None:
        solver = system.settings.solver
        current = GlobalOptions(seed=system.settings.random.seed, seconds=solver.seconds, nodes=solver.nodes,
                                strict=solver.strict)
    return current


def guarded(function):
    """Run a command body and exit with the code its outcome maps to."""
    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        try:
            code = function(*args, **kwargs)
        except typer.Exit:
            raise
        except WorkbenchError as ex:
            logger.error(f"{type(ex).__name__}: {ex.message}")
            code = ex.exit_code
        except Exception as ex:  # pylint: disable=W0718
            logger.exception(ex)
            code = 1
        raise typer.Exit(code or 0)
    return wrapper


def dispatch(command: str, parameters: Dict[str, Any], json_path: Optional[Path] = None,
             csv_path: Optional[Path] = None, svg_path: Optional[Path] = None) -> int:
    """Build the run configuration, run it and echo the record (or the error) as JSON."""
    flags = options()
    output = system.settings.output
    config = RunConfig.build(
        command=command, parameters={key: value for key, value in parameters.items() if value is not None},
        seed=flags.seed, budget={"nodes": flags.nodes, "seconds": flags.seconds, "strict": flags.strict},
        outputs={"json_path": json_path, "csv_path": csv_path, "svg_path": svg_path},
        cache=flags.cache, use_cache=flags.use_cache, indent=output.indent, timing=output.timing,
        salt=output.hashsalt)
    result = run(config, getattr(system.runtime, "cache", None))
    if result.record is not None:
        typer.echo(result.record.to_json(output.indent))
    else:
        typer.echo(canonical(result.error, output.indent), err=True)
    return result.exit_code


JSON = typer.Option(None, "--json", metavar="path", help="Write the result record to this file.")
CSV = typer.Option(None, "--csv", metavar="path", help="Write the result table as CSV.")
SVG = typer.Option(None, "--svg", metavar="path", help="Write the result plot as SVG.")
