# -*- coding: utf-8 -*-
"""Progressions inside digit attractors, and the way back from continuous sets to integer covers."""
import math
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple
from loguru import logger
from modules.errors import ConfigInvalid, MissingWitness
from modules.fractal.attractor import build_truncation, evaluate_string
from modules.fractal.digits import Digit, DigitSystem, as_digit, digits_of


def digit_system_from_cover(points: Iterable, base: int, depth: int) -> DigitSystem:
    """Use a discrete progression cover as the digit set of an attractor of ratio 1/N."""
    return DigitSystem.of(base, points, depth, allow_carries=True)


@dataclass(frozen=True)
class ProgressionCheck:
    holds: bool
    difference: Tuple[Digit, ...]
    strings: List[Tuple[Digit, ...]]
    carries: bool
    synthesized: bool = False

    def dump(self) -> dict:
        return {"holds": self.holds, "difference": [list(digit) for digit in self.difference],
                "strings": [[list(digit) for digit in string] for string in self.strings],
                "carries": self.carries, "synthesized_zero_witness": self.synthesized}


def ap_in_attractor_check(system: DigitSystem, witnesses: Mapping, r, k: int) -> ProgressionCheck:
    """Check that x + i*r, i in [k], lies in the truncation for the digitwise basepoint x.

    With r = sum r_m N^-m the basepoint is x = sum a(r_m) N^-m, so x + i*r has the digits
    a(r_m) + i*r_m, each in the digit set when the discrete cover carries the progression
    a(d) + i*d. Membership is checked on digit strings and on evaluated points.

    :param witnesses: difference digit d -> basepoint a(d) of the discrete cover.
    :param r: the difference, as a rational (vector) or a base-N digit string.
    """
    if k < 1:
        raise ConfigInvalid(f"progression length must be positive, got {k}")
    witnesses = {as_digit(d): as_digit(a) for d, a in witnesses.items()}
    difference = tuple(digits_of(r, system.base, system.depth))
    zero = (0,) * system.dim
    synthesized = False
    if zero in difference and zero not in witnesses:
        # every digit carries the constant progression
        witnesses[zero] = system.digits[0]
        synthesized = True
    missing = sorted({d for d in difference if d not in witnesses})
    if missing:
        raise MissingWitness(f"the discrete cover has no progression for digits {missing}",
                             {"missing": [list(d) for d in missing]})
    digit_set = set(system.digits)
    truncation = build_truncation(system)
    strings, holds, carries = [], True, False
    for i in range(1, k + 1):
        string = tuple(tuple(a + i * c for a, c in zip(witnesses[d], d)) for d in difference)
        strings.append(string)
        carries = carries or any(not 0 <= c < system.base for digit in string for c in digit)
        if not all(digit in digit_set for digit in string):
            holds = False
        elif evaluate_string(system, string) not in truncation.numerators:
            holds = False
    if carries:
        logger.warning(f"progression digits leave [0, {system.base}); membership is checked on formal digit strings")
    return ProgressionCheck(holds, difference, strings, carries, synthesized)


@dataclass(frozen=True)
class Discretization:
    q: int
    points: FrozenSet[Tuple[int, ...]]
    layers: Dict[int, int] = field(default_factory=dict)
    progressions: Dict[Tuple[int, ...], Tuple[int, ...]] = field(default_factory=dict)
    progression_set: FrozenSet[Tuple[int, ...]] = frozenset()

    def dump(self) -> dict:
        payload = {"q": self.q, "S": [list(point) for point in sorted(self.points)], "size": len(self.points)}
        if self.progressions:
            payload["layers"] = [{"i": i, "size": size} for i, size in sorted(self.layers.items())]
            payload["progressions"] = [[list(d), list(a)] for d, a in sorted(self.progressions.items())]
            payload["progression_set_size"] = len(self.progression_set)
        return payload


def _corner(point: Sequence[Fraction], q: int) -> Tuple[int, ...]:
    return tuple(math.ceil(Fraction(c) * q) for c in point)


def discretize_cover(points: Iterable, q: int, witnesses: Optional[Mapping] = None,
                     k: Optional[int] = None) -> Discretization:
    """Send each point to the right corner of its grid cell, scaled by q.

    Cells are closed on the right: coordinate x goes to i = ceil(q x), so ((i-1)/q, i/q] maps to i
    and {0.3, 0.7} at q = 10 becomes {3, 7}.

    With progression witnesses r -> a(r) and a length k, also report the layers
    E_i = {a(r;q) + i r(q)} for 0 <= i < k and the integer set q * union E_i, which holds a
    k-term progression of difference q r(q) at q a(r;q) for every rounded difference.
    """
    if q < 1:
        raise ConfigInvalid(f"grid resolution must be positive, got {q}")
    points = [_vector_fraction(point) for point in points]
    image = frozenset(_corner(point, q) for point in points)
    if not witnesses:
        return Discretization(q, image)
    if k is None or k < 1:
        raise ConfigInvalid("progression layers need a positive length k")
    progressions, layers, union = {}, {}, set()
    for i in range(k):
        layer = set()
        for r, a in witnesses.items():
            d, base = _corner(_vector_fraction(r), q), _corner(_vector_fraction(a), q)
            layer.add(tuple(x + i * y for x, y in zip(base, d)))
            progressions.setdefault(d, base)
        layers[i] = len(layer)
        union |= layer
    logger.debug(f"discretized {len(points)} points at q={q}: |S|={len(image)}, {len(progressions)} differences")
    return Discretization(q, image, layers, progressions, frozenset(union))


def _vector_fraction(value) -> Tuple[Fraction, ...]:
    if isinstance(value, (tuple, list)):
        return tuple(Fraction(c) for c in value)
    return (Fraction(value),)
