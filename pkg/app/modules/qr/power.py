# -*- coding: utf-8 -*-
"""Base-Q powering of a cover, and the digit attractor it hands on.

With S covering the digits, A_q = {s_0 + s_1 Q + ... + s_(q-1) Q^(q-1) : s_i in S} holds a pattern
at every basepoint whose base-Q digits each carry a pattern in S: the digitwise scales add up
to one scale r = sum r_i Q^i.
"""
import itertools
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
from loguru import logger
from modules.constructions.seeds import DEFAULT_SEED, stream
from modules.errors import ConfigInvalid, TooLarge
from modules.fractal import DigitSystem, attractor_dimension
from modules.patterns import PatternFamily, PatternSet

POWER_CAP = 2_000_000
FULL_CHECK_CAP = 100_000
SAMPLE_SIZE = 2_000


def digit_witnesses(points: PatternSet, family: PatternFamily, Q: int,  # pylint: disable=invalid-name
                    witnesses: Optional[Dict[tuple, tuple]] = None) -> Dict[tuple, tuple]:
    """A pattern x + r (x) U inside S for every digit x of {0..Q-1}^d where one exists.

    Known witnesses come first; missing digits are searched through the first family element,
    and a digit lying in S itself falls back to the zero scale.
    """
    ring = family.ring
    table = dict(witnesses or {})
    first = family.elements[0]
    for x in itertools.product(range(Q), repeat=ring.d):
        if x in table:
            continue
        for s in points:
            r = ring.solve_scale(x, s, ring.zero(), first)
            if r is None or not any(r):
                continue
            if all(ring.add(x, ring.scale(r, u)) in points for u in family):
                table[x] = r
                break
        else:
            if x in points:
                table[x] = ring.zero()
    return table


@dataclass(frozen=True)
class PowerExtension:
    Q: int  # pylint: disable=invalid-name
    q_exp: int
    base_size: int
    points: PatternSet
    checked: int
    failures: Tuple[tuple, ...]
    sampled: bool

    @property
    def N(self) -> int:  # pylint: disable=invalid-name
        return self.Q ** self.q_exp

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def exponent(self) -> float:
        return math.log(self.size) / math.log(self.N)

    @property
    def base_exponent(self) -> float:
        return math.log(self.base_size) / math.log(self.Q)

    def dump(self) -> dict:
        return {"Q": self.Q, "q": self.q_exp, "N": self.N, "size": self.size,
                "size_bound": self.base_size ** self.q_exp,
                "exponent": self.exponent, "base_exponent": self.base_exponent, "checked": self.checked,
                "sampled": self.sampled, "failures": [list(x) for x in self.failures[:20]]}


def _combine(digits, Q: int) -> tuple:  # pylint: disable=invalid-name
    return tuple(sum(digit[c] * Q ** i for i, digit in enumerate(digits)) for c in range(len(digits[0])))


def _split(x: tuple, Q: int, q_exp: int) -> List[tuple]:  # pylint: disable=invalid-name
    columns = []
    for c in x:
        column = []
        for _ in range(q_exp):
            c, digit = divmod(c, Q)
            column.append(digit)
        columns.append(column)
    return [tuple(column[i] for column in columns) for i in range(q_exp)]


def power_extend(points: PatternSet, family: PatternFamily, Q: int, q_exp: int,  # pylint: disable=invalid-name
                 witnesses: Optional[Dict[tuple, tuple]] = None, seed: int = DEFAULT_SEED) -> PowerExtension:
    """A_q for the cover S of the digits, checked on basepoints of [Q^q - 1]^d.

    Every basepoint is checked when there are at most ``FULL_CHECK_CAP`` of them, otherwise a
    seeded sample. Basepoints whose digits all fall back to the zero scale count as failures.

    :raises TooLarge: |S|^q exceeds ``POWER_CAP``.
    """
    if q_exp < 1:
        raise ConfigInvalid(f"power exponent must be positive, got {q_exp}")
    ring = family.ring
    if len(points) ** q_exp > POWER_CAP:
        raise TooLarge(f"|S|^q = {len(points) ** q_exp} exceeds {POWER_CAP}",
                       {"size": len(points), "q": q_exp})
    extended = PatternSet(ring, frozenset(_combine(digits, Q) for digits in itertools.product(points, repeat=q_exp)))
    table = digit_witnesses(points, family, Q, witnesses)
    total = (Q ** q_exp - 1) ** ring.d
    if total <= FULL_CHECK_CAP:
        basepoints, sampled = itertools.product(range(1, Q ** q_exp), repeat=ring.d), False
    else:
        rng = stream(seed, "qr.power-extend")
        basepoints = (tuple(int(c) for c in rng.integers(1, Q ** q_exp, size=ring.d)) for _ in range(SAMPLE_SIZE))
        sampled = True
    checked, failures = 0, []
    for x in basepoints:
        checked += 1
        digits = _split(x, Q, q_exp)
        if any(digit not in table for digit in digits):
            failures.append(x)
            continue
        r = _combine([table[digit] for digit in digits], Q)
        if not any(r) or not all(ring.add(x, ring.scale(r, u)) in extended for u in family):
            failures.append(x)
    if failures:
        logger.warning(f"{len(failures)} of {checked} basepoints of [Q^{q_exp} - 1]^{ring.d} lack a pattern in A")
    return PowerExtension(Q, q_exp, len(points), extended, checked, tuple(failures), sampled)


@dataclass(frozen=True)
class ExponentRow:
    q: int
    N: int  # pylint: disable=invalid-name
    size_bound: int
    exponent: float

    def dump(self) -> dict:
        return {"q": self.q, "N": self.N, "size_bound": self.size_bound, "exponent": self.exponent}


def exponent_table(size: int, Q: int, n_target: int) -> List[ExponentRow]:  # pylint: disable=invalid-name
    """log |A_q| / log Q^q from |A_q| <= |S|^q, for every q with Q^(q-1) < n_target."""
    rows, q = [], 1
    while True:
        rows.append(ExponentRow(q, Q ** q, size ** q, math.log(size ** q) / math.log(Q ** q)))
        if Q ** q >= n_target:
            return rows
        q += 1


@dataclass(frozen=True)
class Handoff:
    system: DigitSystem
    shift: Tuple[int, ...]
    dimension: float
    capped: bool

    def dump(self) -> dict:
        return {**self.system.dump(), "shift": list(self.shift), "dimension": self.dimension,
                "capped_at_ambient": self.capped, "carries": self.system.carries}


def attractor_handoff(points: PatternSet, Q: int) -> Handoff:  # pylint: disable=invalid-name
    """S as the digit set of base Q, shifted so every coordinate is nonnegative.

    Digits beyond Q - 1 are kept as carrying digits. The Moran value log |S| / log Q bounds the
    dimension and is capped at d.
    """
    values = list(points)
    if not values:
        raise ConfigInvalid("an empty cover has no attractor")
    d = len(values[0])
    shift = tuple(max(0, -min(value[c] for value in values)) for c in range(d))
    digits = [tuple(v + s for v, s in zip(value, shift)) for value in values]
    system = DigitSystem.of(Q, digits, allow_carries=True)
    dimension = attractor_dimension(system)
    capped = dimension > d
    return Handoff(system, shift, min(dimension, float(d)), capped)
