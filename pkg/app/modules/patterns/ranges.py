# -*- coding: utf-8 -*-
import re
from dataclasses import dataclass
from typing import Iterator, Optional
from modules.errors import ConfigInvalid

_RANGE = re.compile(r"^\s*(-?\d+)?\s*\.\.\s*(-?\d+)?\s*$")


@dataclass(frozen=True)
class IntRange:
    """Closed integer interval ``lo..hi``; used for basepoint and point windows."""
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ConfigInvalid(f"empty window {self.lo}..{self.hi}")

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, value) -> bool:
        if isinstance(value, tuple):
            return all(self.lo <= c <= self.hi for c in value)
        return self.lo <= value <= self.hi

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"

    @classmethod
    def parse(cls, text: str) -> "IntRange":
        match = _RANGE.match(text)
        if not match or match.group(1) is None or match.group(2) is None:
            raise ConfigInvalid(f"malformed window '{text}', expected lo..hi")
        return cls(int(match.group(1)), int(match.group(2)))


@dataclass(frozen=True)
class ScaleRange:
    """Nonzero scales inside ``lo..hi``; a missing bound means unbounded.

    Zero is never a scale. ``positive`` drops the negative half.
    """
    lo: Optional[int] = None
    hi: Optional[int] = None
    positive: bool = False

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ConfigInvalid(f"empty scale range {self}")

    @property
    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    @property
    def low(self) -> Optional[int]:
        if self.positive:
            return 1 if self.lo is None else max(self.lo, 1)
        return self.lo

    def admits(self, value) -> bool:
        """Bounds check for one scalar (zero excluded)."""
        if value == 0:
            return False
        low = self.low
        if low is not None and value < low:
            return False
        return self.hi is None or value <= self.hi

    def __contains__(self, value) -> bool:
        if isinstance(value, tuple):
            if not any(value):
                return False
            low = self.low
            return all((low is None or c >= low) and (self.hi is None or c <= self.hi) for c in value)
        return self.admits(value)

    def __iter__(self) -> Iterator[int]:
        if not self.bounded:
            raise ConfigInvalid(f"cannot enumerate the unbounded scale range {self}")
        return (value for value in range(self.low, self.hi + 1) if value != 0)

    def __str__(self) -> str:
        lo = "" if self.lo is None else self.lo
        hi = "" if self.hi is None else self.hi
        return f"{lo}..{hi}{' (positive)' if self.positive else ''}"

    @classmethod
    def parse(cls, text: str, positive: bool = False) -> "ScaleRange":
        match = _RANGE.match(text)
        if not match:
            raise ConfigInvalid(f"malformed scale range '{text}', expected lo..hi")
        lo, hi = match.group(1), match.group(2)
        return cls(None if lo is None else int(lo), None if hi is None else int(hi), positive)

    @classmethod
    def nonzero(cls, positive: bool = False) -> "ScaleRange":
        return cls(None, None, positive)
