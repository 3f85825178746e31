# -*- coding: utf-8 -*-
import itertools
from enum import Enum
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Iterator, Optional, Union
from sympy import isprime
from modules.errors import RingMismatch, ConfigInvalid
from modules.cyclotomic.ring import CyclotomicRing
from modules.patterns.ranges import IntRange, ScaleRange

Element = Union[int, Fraction, tuple]


class RingKind(str, Enum):
    INTEGERS = "integers"
    RATIONALS = "rationals"
    CYCLOTOMIC = "cyclotomic"
    FIELD = "field"


@dataclass(frozen=True)
class RingContext:
    """Where patterns live: Z, Q, Z[zeta_n] as coefficient vectors, or F_p^dim.

    Elements are ints (Z, F_p), Fractions (Q) or tuples (cyclotomic vectors, F_p^dim for dim > 1).
    Family elements over F_p^dim are integer scalars, scales are field elements.
    """
    kind: RingKind
    n: int = 0
    p: int = 0
    dim: int = 1

    def __post_init__(self):
        if self.kind == RingKind.CYCLOTOMIC:
            CyclotomicRing(self.n)
        if self.kind == RingKind.FIELD:
            if not isprime(self.p):
                raise ConfigInvalid(f"field characteristic {self.p} is not prime")
            if self.dim < 1:
                raise ConfigInvalid(f"field dimension must be positive, got {self.dim}")

    @classmethod
    def integers(cls) -> "RingContext":
        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls) -> "RingContext":
        return cls(RingKind.RATIONALS)

    @classmethod
    def cyclotomic(cls, n: int) -> "RingContext":
        return cls(RingKind.CYCLOTOMIC, n=n)

    @classmethod
    def field(cls, p: int, dim: int = 1) -> "RingContext":
        return cls(RingKind.FIELD, p=p, dim=dim)

    @property
    def cyclotomic_ring(self) -> CyclotomicRing:
        return CyclotomicRing(self.n)

    @property
    def d(self) -> int:
        if self.kind == RingKind.CYCLOTOMIC:
            return self.cyclotomic_ring.d
        if self.kind == RingKind.FIELD:
            return self.dim
        return 1

    @property
    def vectors(self) -> bool:
        return self.kind == RingKind.CYCLOTOMIC or (self.kind == RingKind.FIELD and self.dim > 1)

    @property
    def finite(self) -> bool:
        return self.kind == RingKind.FIELD

    def __str__(self) -> str:
        if self.kind == RingKind.CYCLOTOMIC:
            return f"cyclotomic({self.n})"
        if self.kind == RingKind.FIELD:
            return f"field({self.p},{self.dim})"
        return self.kind.value

    # elements

    def coerce(self, value: Any) -> Element:
        """Validate a basepoint/scale/point and bring it into canonical form."""
        if self.kind == RingKind.INTEGERS:
            if isinstance(value, Fraction) and value.denominator == 1:
                return int(value)
            if isinstance(value, bool) or not isinstance(value, int):
                raise RingMismatch(f"{value!r} is not an integer", {"ring": str(self)})
            return value
        if self.kind == RingKind.RATIONALS:
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                return Fraction(value)
            raise RingMismatch(f"{value!r} is not a rational", {"ring": str(self)})
        if self.kind == RingKind.CYCLOTOMIC:
            if isinstance(value, int) or not isinstance(value, (tuple, list)):
                raise RingMismatch(f"{value!r} is not a coefficient vector", {"ring": str(self)})
            return self.cyclotomic_ring.coerce(value)
        if self.dim == 1:
            if isinstance(value, (tuple, list)) and len(value) == 1:
                value = value[0]
            if not isinstance(value, int):
                raise RingMismatch(f"{value!r} is not a residue", {"ring": str(self)})
            return value % self.p
        if not isinstance(value, (tuple, list)) or len(value) != self.dim:
            raise RingMismatch(f"{value!r} is not a vector of F_{self.p}^{self.dim}", {"ring": str(self)})
        return tuple(int(c) % self.p for c in value)

    def coerce_unit(self, value: Any) -> Element:
        """Validate a family element (a scalar over F_p^dim, a ring element otherwise)."""
        if self.kind == RingKind.FIELD:
            if isinstance(value, bool) or not isinstance(value, int):
                raise RingMismatch(f"field families hold integer scalars, got {value!r}")
            return value
        return self.coerce(value)

    def is_zero(self, value: Element) -> bool:
        if isinstance(value, tuple):
            return not any(value)
        if self.kind == RingKind.FIELD:
            return value % self.p == 0
        return value == 0

    def zero(self) -> Element:
        if self.vectors:
            return (0,) * self.d
        return Fraction(0) if self.kind == RingKind.RATIONALS else 0

    def add(self, left: Element, right: Element) -> Element:
        if self.kind == RingKind.FIELD:
            if self.dim == 1:
                return (left + right) % self.p
            return tuple((a + b) % self.p for a, b in zip(left, right))
        if self.kind == RingKind.CYCLOTOMIC:
            return tuple(a + b for a, b in zip(left, right))
        return left + right

    def sub(self, left: Element, right: Element) -> Element:
        if self.kind == RingKind.FIELD:
            if self.dim == 1:
                return (left - right) % self.p
            return tuple((a - b) % self.p for a, b in zip(left, right))
        if self.kind == RingKind.CYCLOTOMIC:
            return tuple(a - b for a, b in zip(left, right))
        return left - right

    def scale(self, r: Element, u: Element) -> Element:
        """r * u, the pattern product (r (x) u for cyclotomic vectors)."""
        if self.kind == RingKind.FIELD:
            if self.dim == 1:
                return (r * u) % self.p
            return tuple((c * u) % self.p for c in r)
        if self.kind == RingKind.CYCLOTOMIC:
            return self.cyclotomic_ring.multiply(r, u)
        return r * u

    def translate(self, values, shift: Element):
        return [self.add(value, shift) for value in values]

    def solve_scale(self, b1: Element, b2: Element, u1: Element, u2: Element) -> Optional[Element]:
        """The scale r with b1 = x + r*u1 and b2 = x + r*u2 for some x, if it exists in the ring."""
        delta = self.sub(b2, b1)
        if self.kind == RingKind.INTEGERS:
            quotient, remainder = divmod(delta, u2 - u1)
            return None if remainder else quotient
        if self.kind == RingKind.RATIONALS:
            return delta / (u2 - u1)
        if self.kind == RingKind.CYCLOTOMIC:
            return self.cyclotomic_ring.divide_exact(delta, self.sub(u2, u1))
        inverse = pow((u2 - u1) % self.p, -1, self.p)
        if self.dim == 1:
            return (delta * inverse) % self.p
        return tuple((c * inverse) % self.p for c in delta)

    # enumeration

    def points(self, window: Optional[IntRange]) -> Iterator[Element]:
        """Every element of the window (every field element for finite rings)."""
        if self.kind == RingKind.FIELD:
            if self.dim == 1:
                return iter(range(self.p))
            return itertools.product(range(self.p), repeat=self.dim)
        if window is None:
            raise ConfigInvalid(f"a window is required to enumerate {self}")
        if self.vectors:
            return itertools.product(window, repeat=self.d)
        if self.kind == RingKind.RATIONALS:
            return (Fraction(value) for value in window)
        return iter(window)

    def scales(self, domain: ScaleRange) -> Iterator[Element]:
        """Every nonzero scale of the domain (every nonzero field element for finite rings)."""
        if self.kind == RingKind.FIELD:
            return (value for value in self.points(None) if not self.is_zero(value))
        if self.vectors:
            if not domain.bounded:
                raise ConfigInvalid(f"cannot enumerate the unbounded scale range {domain}")
            values = range(domain.low, domain.hi + 1)
            return (vector for vector in itertools.product(values, repeat=self.d) if any(vector))
        if self.kind == RingKind.RATIONALS:
            return (Fraction(value) for value in domain)
        return iter(domain)

    def in_domain(self, r: Element, domain: ScaleRange) -> bool:
        if self.is_zero(r):
            return False
        if self.kind == RingKind.FIELD:
            return True
        return r in domain

    # serialization

    def dump(self, value: Element):
        if isinstance(value, Fraction):
            return str(value) if value.denominator != 1 else value.numerator
        if isinstance(value, tuple):
            return list(value)
        return value

    def load(self, value: Any) -> Element:
        if isinstance(value, str):
            value = Fraction(value)
            if self.kind != RingKind.RATIONALS and value.denominator == 1:
                value = int(value)
        if isinstance(value, list):
            value = tuple(value)
        return self.coerce(value)

    def describe(self) -> dict:
        payload = {"kind": self.kind.value}
        if self.kind == RingKind.CYCLOTOMIC:
            payload["n"] = self.n
        if self.kind == RingKind.FIELD:
            payload.update(p=self.p, dim=self.dim)
        return payload

    @classmethod
    def from_description(cls, payload) -> "RingContext":
        if isinstance(payload, str):
            payload = {"kind": payload}
        try:
            kind = RingKind(payload.get("kind", "integers"))
        except ValueError as ex:
            raise ConfigInvalid(f"unknown ring {payload!r}") from ex
        return cls(kind, n=int(payload.get("n", 0)), p=int(payload.get("p", 0)), dim=int(payload.get("dim", 1)))
