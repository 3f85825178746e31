# -*- coding: utf-8 -*-
import sys
import typer
from loguru import logger
import system
from modules.system.click import setup_click
from modules.system.click import UnsortedGroup


def application() -> typer.Typer:
    """The command line application with every command registered."""
    if getattr(system.runtime, "cli", None) is None:
        setup_click(system.settings.cli)
        system.runtime.cli = typer.Typer(
            options_metavar="[options]", subcommand_metavar="command [args]...",
            no_args_is_help=True, cls=UnsortedGroup, add_completion=False,
            context_settings={"help_option_names": ["-h", "--help"]})
        import commands  # noqa: F401 pylint: disable=W0611,C0415
    return system.runtime.cli


if __name__ == "__main__":

    if not system.environment.environ.get("APP_HIDE_BANNER"):
        typer.secho(f":: {system.project.name} v{system.project.version} ::", fg=typer.colors.BLUE, err=True)
    try:
        extra = {
            "app-name": system.project.name,
            "app-version": system.project.version
        }
        with logger.contextualize(**extra):
            application()(prog_name="runner.sh")
    except Exception as ex:  # pylint: disable=W0718
        logger.exception(ex)
        sys.exit(1)
