# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple
from modules.errors import ConfigInvalid, InvalidCover, OutOfRange

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class LinearEncoding:
    """f(x_1, ..., x_n) = sum (10kN)^i x_i, injective while every |x_i| < 5kN."""
    k: int
    n_bound: int
    dim: int

    def __post_init__(self):
        if self.k < 1 or self.n_bound < 1 or self.dim < 1:
            raise ConfigInvalid("encoding needs positive k, N and dimension")

    @property
    def base(self) -> int:
        return 10 * self.k * self.n_bound

    def encode(self, x: Sequence[int]) -> int:
        if len(x) != self.dim:
            raise ConfigInvalid(f"expected a vector of length {self.dim}, got {len(x)}")
        limit = self.base // 2
        if any(abs(c) >= limit for c in x):
            raise OutOfRange(f"coordinates of {tuple(x)} must stay below {limit} in absolute value")
        return sum(self.base ** (i + 1) * c for i, c in enumerate(x))

    def decode(self, value: int) -> Vector:
        """Balanced base-10kN digits; inverse of :meth:`encode` on its domain."""
        if value % self.base:
            raise OutOfRange(f"{value} is not a multiple of the encoding base {self.base}")
        digits, rest = [], value // self.base
        half = self.base // 2
        for _ in range(self.dim):
            digit = rest % self.base
            if digit >= half:
                digit -= self.base
            digits.append(digit)
            rest = (rest - digit) // self.base
        if rest:
            raise OutOfRange(f"{value} needs more than {self.dim} digits")
        return tuple(digits)


def encode_nd_to_1d(points: Iterable[Sequence[int]], k: int, n_bound: int) -> FrozenSet[int]:
    """The image f(A) of a set in Z^n."""
    points = [tuple(point) for point in points]
    if not points:
        return frozenset()
    encoding = LinearEncoding(k, n_bound, len(points[0]))
    return frozenset(encoding.encode(point) for point in points)


@dataclass(frozen=True)
class EncodedCover:
    points: FrozenSet[int]
    witnesses: Dict[int, int]
    k: int

    def verify(self) -> bool:
        return all(a + i * d in self.points for d, a in self.witnesses.items() for i in range(1, self.k + 1))


def encode_progression_cover(points: Iterable[Sequence[int]], witnesses: Dict[Vector, Vector], k: int,
                             n_bound: int) -> EncodedCover:
    """Carry a cover by k-term progressions {a + i d} in Z^n to Z; witnesses map d to a.

    Linearity sends each progression to a progression of difference f(d), and injectivity keeps
    the cover size and the number of distinct differences.
    """
    points = [tuple(point) for point in points]
    if not points:
        raise ConfigInvalid("cannot encode an empty cover")
    encoding = LinearEncoding(k, n_bound, len(points[0]))
    members = set(points)
    for d, a in witnesses.items():
        missing = [i for i in range(1, k + 1) if tuple(x + i * y for x, y in zip(a, d)) not in members]
        if missing:
            raise InvalidCover(f"progression at {a} with difference {d} leaves the set", {"steps": missing})
    image = frozenset(encoding.encode(point) for point in points)
    mapped = {}
    for d, a in witnesses.items():
        mapped[sum(encoding.base ** (i + 1) * c for i, c in enumerate(d))] = encoding.encode(a)
    cover = EncodedCover(image, mapped, k)
    if len(image) != len(members) or not cover.verify():
        raise InvalidCover("encoded cover lost points or progressions")
    return cover
