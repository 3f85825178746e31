# -*- coding: utf-8 -*-
from typing import Dict, Optional
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings


class Locations(BaseModel):
    base: str = "{root}/var"
    output: str = "{root}/var/output"


class Logging(BaseModel):
    level: str = "INFO"
    format: str = ("<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> "
                   "| <cyan>{name}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>")


class Solver(BaseModel):
    nodes: int = 2_000_000
    seconds: float = 60.0
    strict: bool = False
    oracle_cap: int = Field(24, alias="oracle-cap")

    @field_validator("nodes", "seconds")
    @classmethod
    def positive(cls, value):
        if value <= 0:
            raise ValueError("budgets must be positive")
        return value

    @field_validator("oracle_cap")
    @classmethod
    def capped(cls, value):
        if not 1 <= value <= 24:
            raise ValueError("the oracle enumerates at most 24 candidate points")
        return value


class Cache(BaseModel):
    enabled: bool = True
    path: str = "{root}/var/cache/results.jsonl"
    quarantine: str = "{root}/var/cache/quarantine.jsonl"


class Output(BaseModel):
    indent: int = 2
    timing: bool = False
    hashsalt: str = "kakeya-workbench"


class Random(BaseModel):
    seed: int = 20240229


class Cli(BaseModel):
    styles: Dict[str, Dict[str, str]] = {}
    max_content_width: Optional[int] = Field(150, alias="max-content-width")
    column_width: Optional[int] = Field(55, alias="column-width")
    column_spacing: Optional[int] = Field(4, alias="column-spacing")


class Settings(BaseSettings, extra="allow"):
    logging: Logging = Logging()
    solver: Solver = Solver()
    cache: Cache = Cache()
    output: Output = Output()
    random: Random = Random()
    cli: Cli = Cli()
