# -*- coding: utf-8 -*-
"""Transfers between harmonic 1/[k] patterns and k-term progressions.

A harmonic pattern x + r/i (i in [k]) scaled by i gives i*x + r, which is the progression with
difference x and basepoint r. Reading a progression a + i*d backwards gives the harmonic pattern
d + a/i, so the scale of one side becomes the basepoint of the other.
"""
import math
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping
from loguru import logger
from modules.errors import InvalidCover


@dataclass(frozen=True)
class ProgressionCover:
    """Points containing {a + i*d : i in [k]} for every difference d, with a = witnesses[d]."""
    points: FrozenSet[Fraction]
    witnesses: Dict[Fraction, Fraction]
    k: int
    dropped: List[Fraction] = field(default_factory=list)

    def verify(self) -> List[Fraction]:
        return [d for d, a in self.witnesses.items()
                if d == 0 or any(a + i * d not in self.points for i in range(1, self.k + 1))]


@dataclass(frozen=True)
class HarmonicCover:
    """Points containing {x + r/i : i in [k]} for every basepoint x, with r = witnesses[x]."""
    points: FrozenSet[Fraction]
    witnesses: Dict[Fraction, Fraction]
    k: int

    def verify(self) -> List[Fraction]:
        return [x for x, r in self.witnesses.items()
                if r == 0 or any(x + Fraction(r, i) not in self.points for i in range(1, self.k + 1))]


def _fractions(values) -> FrozenSet[Fraction]:
    return frozenset(Fraction(value) for value in values)


def harmonic_to_arithmetic(points, witnesses: Mapping, k: int) -> ProgressionCover:
    """Map a 1/[k]-pattern cover onto a cover by k-term progressions.

    The result is the union of i*A_i with A_i = {x + r(x)/i}; its size is at most k times the input.
    A basepoint x = 0 would give a progression of difference 0 and is dropped.
    """
    source = HarmonicCover(_fractions(points), {Fraction(x): Fraction(r) for x, r in witnesses.items()}, k)
    failures = source.verify()
    if failures:
        raise InvalidCover("harmonic witnesses are not contained in the set",
                           {"basepoints": [str(x) for x in failures[:20]]})
    image, mapped, dropped = set(), {}, []
    for x, r in source.witnesses.items():
        if x == 0:
            dropped.append(x)
            continue
        image.update(i * (x + r / i) for i in range(1, k + 1))
        mapped[x] = r
    if dropped:
        logger.warning(f"basepoint 0 has no progression counterpart, dropped {len(dropped)} witness")
    return ProgressionCover(frozenset(image), mapped, k, dropped)


def arithmetic_to_harmonic(points, witnesses: Mapping, k: int) -> HarmonicCover:
    """Inverse transfer: the progression a + i*d becomes the harmonic pattern d + a/i."""
    source = ProgressionCover(_fractions(points), {Fraction(d): Fraction(a) for d, a in witnesses.items()}, k)
    failures = source.verify()
    if failures:
        raise InvalidCover("progression witnesses are not contained in the set",
                           {"differences": [str(d) for d in failures[:20]]})
    image, mapped = set(), {}
    for d, a in source.witnesses.items():
        if a == 0:
            raise InvalidCover("a progression based at 0 maps to a harmonic pattern of scale 0",
                               {"difference": str(d)})
        image.update((a + i * d) / i for i in range(1, k + 1))
        mapped[d] = a
    return HarmonicCover(frozenset(image), mapped, k)


def factorial_embed_check(x: int, r: int, k: int) -> bool:
    """x + (k! r) * (1/[k]) lies inside x + r * [k!]."""
    order = math.factorial(k)
    for i in range(1, k + 1):
        point = x + Fraction(order * r, i)
        j = (point - x) / r
        if j.denominator != 1 or not 1 <= j <= order:
            return False
    return True
