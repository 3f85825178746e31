# -*- coding: utf-8 -*-
import math
from dataclasses import dataclass
from functools import reduce
from typing import List, Sequence, Tuple
from loguru import logger
from sympy import nextprime, sqrt_mod
from sympy.ntheory import is_primitive_root
from sympy.ntheory.modular import crt
from modules.errors import ArityMismatch, InvalidResidue
from modules.cyclotomic.ring import CyclotomicRing, CyclotomicElement, Coefficients


@dataclass(frozen=True)
class PrimeSystem:
    """Consecutive primes q = a (mod n), indexed from 1 in ascending order.

    :param n: cyclotomic index.
    :param a: primitive root modulo n selecting the residue class.
    :param primes: the chosen primes, ascending.
    :param first_index: index of ``primes[0]`` within the residue class.
    """
    n: int
    a: int
    primes: Tuple[int, ...]
    first_index: int = 1

    @property
    def ring(self) -> CyclotomicRing:
        return CyclotomicRing(self.n)

    @property
    def Q(self) -> int:  # pylint: disable=invalid-name
        return reduce(lambda x, y: x * y, self.primes, 1)

    @property
    def m(self) -> int:
        return len(self.primes)

    def dump(self) -> dict:
        return {"n": self.n, "a": self.a, "primes": [str(q) for q in self.primes],
                "first_index": self.first_index, "Q": str(self.Q)}

    @classmethod
    def explicit(cls, n: int, primes: Sequence[int]) -> "PrimeSystem":
        """Build a system from a hand-picked prime list, checking that each prime is inert."""
        ring = CyclotomicRing(n)
        ordered = tuple(sorted(int(q) for q in primes))
        for q in ordered:
            if not is_inert(q, ring):
                raise InvalidResidue(f"{q} does not stay prime in Z[zeta_{n}]", {"prime": q})
        a = 1 if n == 2 else ordered[0] % n
        return cls(n=n, a=a, primes=ordered, first_index=0)


def residue_class(n: int, a: int):
    """Yield the primes q = a (mod n) in ascending order (odd primes only)."""
    if math.gcd(a, n) != 1 or not is_primitive_root(a % n, n):
        raise InvalidResidue(f"{a} does not generate the unit group modulo {n}", {"n": n, "a": a})
    q = 2
    while True:
        q = nextprime(q)
        if q % n == a % n:
            yield q


def find_prime_system(n: int, a: int, i_lo: int, i_hi: int) -> PrimeSystem:
    """The i_lo-th through i_hi-th primes congruent to a modulo n."""
    if i_lo < 1 or i_hi < i_lo:
        raise ArityMismatch(f"empty prime index range [{i_lo}, {i_hi}]")
    picked: List[int] = []
    for index, q in enumerate(residue_class(n, a), start=1):
        if index >= i_lo:
            picked.append(q)
        if index == i_hi:
            break
    system = PrimeSystem(n=n, a=a, primes=tuple(picked), first_index=i_lo)
    logger.debug(f"prime system n={n} a={a} [{i_lo}, {i_hi}] -> {picked}")
    return system


def is_inert(q: int, ring: CyclotomicRing) -> bool:
    """q stays prime in the ring; for Z[i] this means -1 is not a square modulo q."""
    if ring.d == 1:
        return q > 2
    return q % 2 == 1 and sqrt_mod(q - 1, q) is None


def crt_split(x, system: PrimeSystem) -> List[Coefficients]:
    """Coefficient vectors of x reduced modulo each prime."""
    coeffs = x.coeffs if isinstance(x, CyclotomicElement) else system.ring.coerce(x)
    return [tuple(c % q for c in coeffs) for q in system.primes]


def crt_lift(residues: Sequence[Sequence[int]], system: PrimeSystem) -> CyclotomicElement:
    """Inverse of :func:`crt_split` with coefficients in [0, Q)."""
    ring = system.ring
    if len(residues) != system.m:
        raise ArityMismatch(f"expected {system.m} residues, got {len(residues)}")
    if any(len(residue) != ring.d for residue in residues):
        raise ArityMismatch(f"every residue needs {ring.d} coefficients")
    moduli = list(system.primes)
    coeffs = []
    for position in range(ring.d):
        value, _ = crt(moduli, [int(residue[position]) % q for residue, q in zip(residues, moduli)])
        coeffs.append(int(value))
    return CyclotomicElement(ring, tuple(coeffs))


@dataclass(frozen=True)
class PrimorialRatio:
    log_product: float
    m_log_m: float

    @property
    def ratio(self) -> float:
        return self.log_product / self.m_log_m


def primorial_ratio(system: PrimeSystem) -> PrimorialRatio:
    """log of the prime product against m log m; reported, never asserted."""
    m = system.m
    if m < 2:
        raise ArityMismatch("primorial ratio needs at least two primes")
    log_product = math.fsum(math.log(q) for q in system.primes)
    return PrimorialRatio(log_product=log_product, m_log_m=m * math.log(m))
