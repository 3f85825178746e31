# -*- coding: utf-8 -*-
"""Result records, the unit every run emits and the cache stores.

Records are plain JSON after normalisation: fractions and surds become strings, sets become
sorted lists. Canonical text uses sorted keys so identical runs give identical bytes.
"""
import json
import hashlib
from fractions import Fraction
from typing import Any, Dict, Optional
import sympy as sp
from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


def _default(value: Any):
    if isinstance(value, (Fraction, sp.Basic)):
        return str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "dump"):
        return value.dump()
    raise TypeError(f"{type(value).__name__} is not serializable")


def canonical(payload: Any, indent: Optional[int] = None) -> str:
    separators = (",", ":") if indent is None else (",", ": ")
    return json.dumps(payload, sort_keys=True, separators=separators, indent=indent, default=_default,
                      ensure_ascii=False)


def normalize(payload: Any) -> Any:
    """The JSON value the payload turns into, so records compare equal after a round trip."""
    return json.loads(canonical(payload))


def sha256(payload: Any) -> str:
    return hashlib.sha256(canonical(payload).encode("utf-8")).hexdigest()


def problem_key(command: str, inputs: Dict[str, Any], seed: int) -> str:
    """Hash of what was asked; stable across runs and machines."""
    return sha256({"command": command, "inputs": inputs, "seed": seed, "schema_version": SCHEMA_VERSION})


class Provenance(BaseModel):
    module: str
    anchor: str


class ResultRecord(BaseModel):
    schema_version: int = SCHEMA_VERSION
    key: str
    command: str
    seed: int
    inputs: Dict[str, Any]
    outputs: Dict[str, Any]
    provenance: Provenance
    digest: str
    timing: Optional[float] = Field(default=None)

    def intact(self) -> bool:
        """Outputs still hash to the digest written with them."""
        return sha256(self.outputs) == self.digest

    def to_json(self, indent: Optional[int] = None) -> str:
        payload = self.model_dump()
        if payload["timing"] is None:
            payload.pop("timing")
        return canonical(payload, indent)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls.model_validate(json.loads(text))


def make_record(command: str, inputs: Dict[str, Any], outputs: Dict[str, Any], seed: int, provenance: Provenance,
                timing: Optional[float] = None) -> ResultRecord:
    inputs, outputs = normalize(inputs), normalize(outputs)
    return ResultRecord(key=problem_key(command, inputs, seed), command=command, seed=seed, inputs=inputs,
                        outputs=outputs, provenance=provenance, digest=sha256(outputs), timing=timing)
