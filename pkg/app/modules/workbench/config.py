# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Any, Dict, Optional
from pydantic import BaseModel, Field, ValidationError, field_validator
from modules.constructions.seeds import DEFAULT_SEED
from modules.errors import ConfigInvalid
from modules.reports.plots import DEFAULT_SALT
from modules.solver import Budget


class BudgetConfig(BaseModel):
    nodes: int = 2_000_000
    seconds: float = 60.0
    strict: bool = False

    @field_validator("nodes", "seconds")
    @classmethod
    def positive(cls, value):
        if value <= 0:
            raise ValueError("budgets must be positive")
        return value

    def budget(self) -> Budget:
        return Budget(self.nodes, self.seconds, self.strict)


class OutputPaths(BaseModel):
    json_path: Optional[Path] = None
    csv_path: Optional[Path] = None
    svg_path: Optional[Path] = None


class RunConfig(BaseModel):
    """One invocation of a workbench command; the seed is echoed into every record."""
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: int = Field(DEFAULT_SEED, ge=0)
    budget: BudgetConfig = BudgetConfig()
    outputs: OutputPaths = OutputPaths()
    cache: Optional[Path] = None
    use_cache: bool = True
    indent: int = Field(2, ge=0)
    timing: bool = False
    salt: str = DEFAULT_SALT

    @classmethod
    def build(cls, **payload) -> "RunConfig":
        """Validate, turning schema errors into :class:`ConfigInvalid`."""
        try:
            return cls.model_validate(payload)
        except ValidationError as ex:
            raise ConfigInvalid(f"invalid run configuration: {ex.error_count()} errors",
                                [{"field": ".".join(str(p) for p in error["loc"]), "error": error["msg"]}
                                 for error in ex.errors()]) from ex
