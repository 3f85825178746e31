# -*- coding: utf-8 -*-
import time
from pathlib import Path
from dataclasses import dataclass, field
from typing import Dict, Optional
from loguru import logger
from modules.cache import ResultCache
from modules.errors import BudgetExhausted, ConfigInvalid, WorkbenchError
from modules.reports import Provenance, ResultRecord, Table, emit_plot, make_record, normalize, problem_key
from modules.workbench.config import RunConfig
from modules.workbench.handlers import HANDLERS, Handler, Job
from modules.workbench.verifiers import verify_record

EXIT_OK = 0
EXIT_UNEXPECTED = 1


@dataclass
class RunResult:
    exit_code: int
    record: Optional[ResultRecord] = None
    artifacts: Dict[str, str] = field(default_factory=dict)
    error: Optional[dict] = None
    cached: bool = False


def exit_code_for(error: BaseException) -> int:
    """0 ok, 1 unexpected, 2 config, 3 infeasible, 4 budget, 5 too large, 6 cache, 7 other domain errors."""
    if isinstance(error, WorkbenchError):
        return error.exit_code
    return EXIT_UNEXPECTED


def inputs_of(config: RunConfig, handler: Handler) -> dict:
    inputs = dict(config.parameters)
    if handler.budgeted:
        inputs["budget"] = config.budget.model_dump()
    return normalize(inputs)


def table_of(handler: Handler, record: ResultRecord) -> Optional[Table]:
    return handler.table(record.outputs) if handler.table else None


def write_artifacts(config: RunConfig, handler: Handler, record: ResultRecord) -> Dict[str, str]:
    """JSON, CSV and SVG files for the paths the config names."""
    artifacts, paths = {}, config.outputs
    table = table_of(handler, record)

    def write(kind: str, path: Path, payload):
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(payload, bytes):
            path.write_bytes(payload)
        else:
            path.write_text(payload, encoding="utf-8")
        artifacts[kind] = str(path)

    if paths.json_path:
        write("json", paths.json_path, record.to_json(config.indent) + "\n")
    if paths.csv_path:
        if table is None:
            raise ConfigInvalid(f"{handler.command} produces no table for CSV output")
        write("csv", paths.csv_path, table.to_csv())
    if paths.svg_path:
        if table is None or handler.plot is None:
            raise ConfigInvalid(f"{handler.command} produces no plot for SVG output")
        write("svg", paths.svg_path, emit_plot(table, handler.plot, *handler.axes, salt=config.salt))
    return artifacts


def open_cache(config: RunConfig, cache: Optional[ResultCache]) -> Optional[ResultCache]:
    if not config.use_cache:
        return None
    if config.cache is not None and (cache is None or cache.path != Path(config.cache)):
        return ResultCache(config.cache, verifier=verify_record)
    return cache


def execute(config: RunConfig, cache: Optional[ResultCache] = None) -> RunResult:
    """Serve from the cache or compute, then write artifacts; errors propagate."""
    handler = HANDLERS.get(config.command)
    if handler is None:
        raise ConfigInvalid(f"unknown command '{config.command}'", {"known": sorted(HANDLERS)})
    inputs = inputs_of(config, handler)
    key = problem_key(config.command, inputs, config.seed)
    cache = open_cache(config, cache)
    record = cache.lookup(key) if cache is not None else None
    cached = record is not None
    if record is None:
        started = time.perf_counter()
        outputs = handler.compute(Job(dict(config.parameters), config.seed, config.budget.budget()))
        timing = time.perf_counter() - started if config.timing else None
        record = make_record(config.command, inputs, outputs, config.seed,
                             Provenance(module=handler.module, anchor=handler.anchor), timing)
        if cache is not None:
            cache.append(record)
    artifacts = write_artifacts(config, handler, record)
    logger.info(f"{config.command} {'served from cache' if cached else 'computed'} under {record.key[:12]}")
    return RunResult(EXIT_OK, record, artifacts, cached=cached)


def run(config: RunConfig, cache: Optional[ResultCache] = None) -> RunResult:
    """Dispatch one command and map whatever goes wrong to its exit code."""
    with logger.contextualize(command=config.command, seed=config.seed):
        try:
            return execute(config, cache)
        except BudgetExhausted as ex:
            logger.error(ex.message)
            payload = ex.dump()
            if ex.incumbent is not None and hasattr(ex.incumbent, "dump"):
                payload["incumbent"] = normalize(ex.incumbent.dump())
            return RunResult(ex.exit_code, error=payload)
        except WorkbenchError as ex:
            logger.error(f"{type(ex).__name__}: {ex.message}")
            return RunResult(ex.exit_code, error=normalize(ex.dump()))
        except Exception as ex:  # pylint: disable=W0718
            logger.exception(ex)
            return RunResult(EXIT_UNEXPECTED, error={"error": type(ex).__name__, "message": str(ex), "details": None})
