# -*- coding: utf-8 -*-
import typer
from loguru import logger
import system
from commands.common import guarded, options
from modules.cache import ResultCache
from modules.errors import CacheCorrupt, ConfigInvalid
from modules.reports import canonical
from modules.workbench import verify_record


def current_cache() -> ResultCache:
    flags = options()
    if flags.cache is not None:
        return ResultCache(flags.cache, verifier=verify_record)
    cache = getattr(system.runtime, "cache", None)
    if cache is None:
        raise ConfigInvalid("no result cache configured")
    return cache


@system.runtime.cli.command(name="cache:lookup", options_metavar="[options]")
@guarded
def lookup(key: str = typer.Argument(..., metavar="key", help="Problem hash of the record.")):
    """
    Print a cached record after re-verifying its witnesses.
    """
    record = current_cache().lookup(key, strict=True)
    if record is None:
        logger.info(f"no record under {key[:12]}")
        typer.echo("null")
        return 0
    typer.echo(record.to_json(system.settings.output.indent))
    return 0


@system.runtime.cli.command(name="cache:verify", options_metavar="[options]")
@guarded
def verify():
    """
    Re-verify every cached record and quarantine those that fail.
    """
    cache = current_cache()
    report = cache.verify()
    typer.echo(canonical(report.dump(), system.settings.output.indent))
    if report.quarantined:
        raise CacheCorrupt(f"{len(report.quarantined)} records quarantined", str(cache.quarantine), report.dump())
    return 0
