# -*- coding: utf-8 -*-
import os
import tempfile
from pathlib import Path
import pytest

ROOT = Path(__file__).resolve().parent.parent
os.environ.setdefault("APP_ROOT", str(ROOT))
os.environ.setdefault("APP_MODE", "development")
os.environ["APP_CACHE"] = os.path.join(tempfile.mkdtemp(prefix="kakeya-"), "results.jsonl")

# pylint: disable=C0413,W0621
import system  # noqa: E402
from modules.cache import ResultCache  # noqa: E402
from modules.workbench.verifiers import verify_record  # noqa: E402


@pytest.fixture
def cache(tmp_path) -> ResultCache:
    return ResultCache(tmp_path / "results.jsonl", verifier=verify_record)


@pytest.fixture
def cli(tmp_path, monkeypatch):
    """Invoke the command line application against a private cache."""
    from typer.testing import CliRunner  # pylint: disable=C0415
    from runner import application  # pylint: disable=C0415

    monkeypatch.setattr(system.runtime, "cache", ResultCache(tmp_path / "cli.jsonl", verifier=verify_record),
                        raising=False)
    app = application()
    runner = CliRunner()

    def invoke(*args: str):
        system.runtime.options = None
        return runner.invoke(app, list(args))
    return invoke
