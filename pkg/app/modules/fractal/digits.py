# -*- coding: utf-8 -*-
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Iterable, List, Sequence, Tuple, Union
from modules.errors import ConfigInvalid, ResolutionExceeded

Digit = Tuple[int, ...]


def as_digit(value: Any) -> Digit:
    if isinstance(value, (tuple, list)):
        return tuple(int(c) for c in value)
    return (int(value),)


@dataclass(frozen=True)
class DigitSystem:
    """Maps x -> (a + x)/N for a in the digit set, truncated at ``depth`` levels.

    Digits are vectors of Z^n; with ``allow_carries`` they may leave [0, N), as happens when a
    discrete cover is used as its own digit set.
    """
    base: int
    digits: Tuple[Digit, ...]
    depth: int = 1
    allow_carries: bool = False

    def __post_init__(self):
        if self.base < 2:
            raise ConfigInvalid(f"digit base must be at least 2, got {self.base}")
        if self.depth < 1:
            raise ConfigInvalid(f"truncation depth must be positive, got {self.depth}")
        digits = sorted({as_digit(value) for value in self.digits})
        if not digits:
            raise ConfigInvalid("digit set must be nonempty")
        if len({len(digit) for digit in digits}) != 1:
            raise ConfigInvalid("digits must share one dimension")
        if not self.allow_carries and any(not 0 <= c < self.base for digit in digits for c in digit):
            raise ConfigInvalid(f"digits must lie in [0, {self.base}) without carries")
        object.__setattr__(self, "digits", tuple(digits))

    @classmethod
    def of(cls, base: int, digits: Iterable[Any], depth: int = 1, allow_carries: bool = False) -> "DigitSystem":
        return cls(base, tuple(digits), depth, allow_carries)

    @property
    def dim(self) -> int:
        return len(self.digits[0])

    @property
    def carries(self) -> bool:
        return any(not 0 <= c < self.base for digit in self.digits for c in digit)

    def deeper(self, depth: int) -> "DigitSystem":
        return DigitSystem(self.base, self.digits, depth, self.allow_carries)

    def dump(self) -> dict:
        return {"base": self.base, "digits": [list(digit) for digit in self.digits], "depth": self.depth,
                "dim": self.dim}


def open_set_condition(system: DigitSystem) -> bool:
    """Distinct digits inside [0, N)^n map the open unit cube into disjoint subcubes of itself."""
    return not system.carries


def digits_of(value: Union[Fraction, Sequence, str], base: int, depth: int) -> List[Digit]:
    """Base-N digits r_1..r_depth of a point of [0, 1)^n, with value = sum r_m N^-m.

    Accepts a rational, a vector of rationals, or a digit string such as ``"0.12"``.
    """
    if isinstance(value, str):
        text = value.strip()
        head, _, tail = text.partition(".")
        if head not in ("", "0") or not all(ch.isdigit() and int(ch) < base for ch in tail):
            raise ConfigInvalid(f"malformed base-{base} fraction '{value}'")
        if len(tail) > depth:
            raise ResolutionExceeded(f"'{value}' needs {len(tail)} digits, depth is {depth}")
        return [(int(ch),) for ch in tail.ljust(depth, "0")]
    coords = [Fraction(c) for c in value] if isinstance(value, (tuple, list)) else [Fraction(value)]
    columns = []
    for c in coords:
        if not 0 <= c < 1:
            raise ResolutionExceeded(f"{c} is outside [0, 1)")
        scaled = c * base ** depth
        if scaled.denominator != 1:
            raise ResolutionExceeded(f"{c} is not a depth-{depth} base-{base} fraction")
        number, column = int(scaled), []
        for _ in range(depth):
            number, digit = divmod(number, base)
            column.append(digit)
        columns.append(column[::-1])
    return [tuple(column[m] for column in columns) for m in range(depth)]
