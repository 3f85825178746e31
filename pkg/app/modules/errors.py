# -*- coding: utf-8 -*-
from typing import Any, Optional


class WorkbenchError(Exception):
    """Base error carrying a structured payload.

    :param message: human readable message.
    :param details: optional machine readable payload echoed into reports.
    """
    exit_code = 7

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.details = details

    def dump(self) -> dict:
        return {"error": type(self).__name__, "message": self.message, "details": self.details}


class ConfigInvalid(WorkbenchError):
    exit_code = 2


class Infeasible(WorkbenchError):
    exit_code = 3


class BudgetExhausted(WorkbenchError):
    exit_code = 4

    def __init__(self, message: str, incumbent: Any = None, details: Optional[Any] = None):
        super().__init__(message, details)
        self.incumbent = incumbent


class TooLarge(WorkbenchError):
    exit_code = 5


class CacheCorrupt(WorkbenchError):
    exit_code = 6

    def __init__(self, message: str, quarantine: str, details: Optional[Any] = None):
        super().__init__(message, details)
        self.quarantine = quarantine


class ZeroScale(WorkbenchError):
    pass


class RingMismatch(WorkbenchError):
    pass


class DuplicateElements(WorkbenchError):
    pass


class DegeneratePattern(WorkbenchError):
    pass


class InvalidCover(WorkbenchError):
    pass


class OutOfRange(WorkbenchError):
    pass


class HypothesisFails(WorkbenchError):
    pass


class SeedExhausted(WorkbenchError):
    pass


class InvalidResidue(WorkbenchError):
    pass


class ArityMismatch(WorkbenchError):
    pass


class EpsilonViolated(WorkbenchError):
    pass


class NoPrimeFound(WorkbenchError):
    pass


class ResolutionExceeded(WorkbenchError):
    pass


class MissingWitness(WorkbenchError):
    pass


class NoHarmonicFamily(WorkbenchError):
    pass


class RegistryMiss(WorkbenchError):
    pass


class DegeneratePolytope(WorkbenchError):
    pass


class DegenerateScale(WorkbenchError):
    pass


class EmptyTable(WorkbenchError):
    pass
