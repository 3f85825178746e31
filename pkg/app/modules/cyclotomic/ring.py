# -*- coding: utf-8 -*-
"""Exact arithmetic in Z[zeta_n] for n in {2, 4}, stored in the power basis."""
from dataclasses import dataclass
from typing import Iterable, Tuple
from sympy import totient
from modules.errors import RingMismatch

SUPPORTED = (2, 4)

Coefficients = Tuple[int, ...]


@dataclass(frozen=True)
class CyclotomicRing:
    """Z[zeta_n] with the reduction zeta^d = -1.

    For n a power of two the minimal polynomial of zeta is x^d + 1, so products reduce
    negacyclically. n = 2 gives the integers (d = 1), n = 4 the Gaussian integers (d = 2).
    """
    n: int

    def __post_init__(self):
        if self.n not in SUPPORTED:
            raise RingMismatch(f"unsupported cyclotomic ring Z[zeta_{self.n}]", {"n": self.n})

    @property
    def d(self) -> int:
        return int(totient(self.n))

    def coerce(self, value) -> Coefficients:
        """Normalize an int or an iterable of ints into a coefficient tuple of length d."""
        if isinstance(value, int):
            value = (value,) if self.d == 1 else None
        if value is None:
            raise RingMismatch(f"scalar given where a length-{self.d} vector is expected")
        coeffs = tuple(int(c) for c in value)
        if len(coeffs) != self.d:
            raise RingMismatch(f"expected {self.d} coefficients, got {len(coeffs)}", {"value": list(coeffs)})
        return coeffs

    def multiply(self, left: Coefficients, right: Coefficients) -> Coefficients:
        """Negacyclic convolution of coefficient vectors (the ring product)."""
        d = self.d
        out = [0] * d
        for i, a in enumerate(left):
            if not a:
                continue
            for j, b in enumerate(right):
                k = i + j
                if k < d:
                    out[k] += a * b
                else:
                    out[k - d] -= a * b
        return tuple(out)

    def add(self, left: Coefficients, right: Coefficients) -> Coefficients:
        return tuple(a + b for a, b in zip(left, right))

    def sub(self, left: Coefficients, right: Coefficients) -> Coefficients:
        return tuple(a - b for a, b in zip(left, right))

    def zero(self) -> Coefficients:
        return (0,) * self.d

    def one(self) -> Coefficients:
        return (1,) + (0,) * (self.d - 1)

    def norm_sq(self, value: Coefficients) -> int:
        """Field norm for d <= 2 (|z|^2 for Gaussian integers, x^2 for integers)."""
        return sum(c * c for c in value)

    def divide_exact(self, left: Coefficients, right: Coefficients):
        """Return q with q*right == left, or None when right does not divide left."""
        if not any(right):
            return None
        if self.d == 1:
            quotient, remainder = divmod(left[0], right[0])
            return None if remainder else (quotient,)
        # multiply by the conjugate and divide by the norm
        a, b = left
        c, e = right
        norm = c * c + e * e
        real, imag = a * c + b * e, b * c - a * e
        if real % norm or imag % norm:
            return None
        return real // norm, imag // norm

    def element(self, value) -> "CyclotomicElement":
        return CyclotomicElement(self, self.coerce(value))


@dataclass(frozen=True)
class CyclotomicElement:
    ring: CyclotomicRing
    coeffs: Coefficients

    def _check(self, other: "CyclotomicElement"):
        if not isinstance(other, CyclotomicElement) or other.ring != self.ring:
            raise RingMismatch("operands belong to different rings")

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(self.ring, self.ring.add(self.coeffs, other.coeffs))

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(self.ring, self.ring.sub(self.coeffs, other.coeffs))

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.ring, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        return otimes(self, other)

    @property
    def norm_inf(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    @property
    def norm_sq(self) -> int:
        return self.ring.norm_sq(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class NormBound:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def otimes(r: CyclotomicElement, u: CyclotomicElement) -> CyclotomicElement:
    """r (x) u: pull back the ring product to Z^d."""
    if not isinstance(r, CyclotomicElement) or not isinstance(u, CyclotomicElement) or r.ring != u.ring:
        raise RingMismatch("otimes needs two elements of the same cyclotomic ring")
    return CyclotomicElement(r.ring, r.ring.multiply(r.coeffs, u.coeffs))


def norm_bound_check(r: CyclotomicElement, u: CyclotomicElement) -> NormBound:
    """Both sides of ||r (x) u||_inf <= 2d * ||r||_inf * ||u||_inf."""
    product = otimes(r, u)
    return NormBound(lhs=product.norm_inf, rhs=2 * r.ring.d * r.norm_inf * u.norm_inf)


def elements(ring: CyclotomicRing, values: Iterable) -> Tuple[CyclotomicElement, ...]:
    return tuple(ring.element(value) for value in values)
