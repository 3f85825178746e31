# -*- coding: utf-8 -*-
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Any, FrozenSet, Iterable, Iterator, Tuple
from modules.errors import ConfigInvalid, DegeneratePattern, DuplicateElements, ZeroScale
from modules.patterns.rings import Element, RingContext, RingKind


@dataclass(frozen=True)
class PatternFamily:
    """A finite set U of nonzero scalars; patterns are x + r*U.

    Elements are kept sorted. Duplicates are an error since |U| is load bearing everywhere.
    Vector families reject zero coordinates unless ``strict_coordinates`` is off.
    """
    ring: RingContext
    elements: Tuple[Element, ...]
    label: str = ""
    strict_coordinates: bool = field(default=True, compare=False)

    def __post_init__(self):
        if not self.elements:
            raise ConfigInvalid("a pattern family needs at least one element")
        values = [self.ring.coerce_unit(value) for value in self.elements]
        for value in values:
            if self.ring.is_zero(value):
                raise DegeneratePattern(f"family element {value!r} is zero", {"family": self.label})
            if isinstance(value, tuple) and self.strict_coordinates and not all(value):
                raise DegeneratePattern(f"family element {value!r} has a zero coordinate",
                                        {"family": self.label})
        keys = [value % self.ring.p if self.ring.kind == RingKind.FIELD else value for value in values]
        if len(set(keys)) != len(keys):
            raise DuplicateElements("pattern family elements must be pairwise distinct",
                                    {"elements": [self.ring.dump(value) for value in values]})
        object.__setattr__(self, "elements", tuple(sorted(values)))

    @classmethod
    def of(cls, values: Iterable[Any], ring: RingContext = None, label: str = "",
           strict_coordinates: bool = True) -> "PatternFamily":
        ring = ring or RingContext.integers()
        return cls(ring, tuple(values), label or "", strict_coordinates)

    @property
    def k(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def integral(self) -> bool:
        return self.ring.kind == RingKind.INTEGERS

    @property
    def positive_integers(self) -> bool:
        return self.integral and all(u > 0 for u in self.elements)

    @property
    def max_norm(self) -> int:
        """Largest absolute value (sup norm for vectors)."""
        def norm(value):
            if isinstance(value, tuple):
                return max(abs(c) for c in value)
            return abs(value)
        return max(norm(value) for value in self.elements)

    def dump(self) -> dict:
        return {"ring": self.ring.describe(), "elements": [self.ring.dump(u) for u in self.elements],
                "label": self.label}

    def __str__(self) -> str:
        inner = ", ".join(str(self.ring.dump(u)) for u in self.elements)
        return f"{self.label or 'U'}{{{inner}}}"


@dataclass(frozen=True)
class PatternSet:
    """Finite set of ring elements; iteration is in sorted order."""
    ring: RingContext
    points: FrozenSet[Element] = frozenset()

    @classmethod
    def of(cls, ring: RingContext, values: Iterable[Any]) -> "PatternSet":
        return cls(ring, frozenset(ring.coerce(value) for value in values))

    def __iter__(self) -> Iterator[Element]:
        return iter(sorted(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, value) -> bool:
        return value in self.points

    def contains_all(self, values: Iterable[Element]) -> bool:
        return all(value in self.points for value in values)

    def sorted(self) -> Tuple[Element, ...]:
        return tuple(sorted(self.points))

    def translate(self, shift: Element) -> "PatternSet":
        return PatternSet(self.ring, frozenset(self.ring.add(value, shift) for value in self.points))

    def dump(self) -> list:
        return [self.ring.dump(value) for value in self.sorted()]


@dataclass(frozen=True)
class PatternInstance:
    basepoint: Element
    scale: Element
    family: PatternFamily

    def __post_init__(self):
        ring = self.family.ring
        object.__setattr__(self, "basepoint", ring.coerce(self.basepoint))
        object.__setattr__(self, "scale", ring.coerce(self.scale))
        if ring.is_zero(self.scale):
            raise ZeroScale("pattern scale must be nonzero", {"basepoint": ring.dump(self.basepoint)})

    def realize(self) -> Tuple[Element, ...]:
        ring = self.family.ring
        return tuple(ring.add(self.basepoint, ring.scale(self.scale, u)) for u in self.family)


def is_fraction_family(values: Iterable[Any]) -> bool:
    return any(isinstance(value, Fraction) and value.denominator != 1 for value in values)
