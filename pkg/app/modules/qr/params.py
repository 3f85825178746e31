# -*- coding: utf-8 -*-
"""Parameters of the quadratic-residue construction over Z[zeta_n], n in {2, 4}.

The family U lives in Z^d (d = 1 for the integers, d = 2 for the Gaussian integers) and the
scales come from a system of primes that stay prime in the ring. Every prime must exceed the sup
norm f_k of U so that each u is a unit modulo each prime.
"""
import math
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence
from loguru import logger
from modules.cyclotomic import PrimeSystem, crt_lift, crt_split, find_prime_system
from modules.errors import ConfigInvalid
from modules.patterns import PatternFamily, RingContext, RingKind

QR_CAP = 2_000_000
PRIMITIVE_ROOTS = {2: 1, 4: 3}


@dataclass(frozen=True)
class QRParams:
    n: int
    family: PatternFamily
    system: PrimeSystem
    f_k: int
    truncated: bool = False

    def __post_init__(self):
        if self.family.ring.kind != RingKind.CYCLOTOMIC or self.family.ring.n != self.n:
            raise ConfigInvalid(f"family must live in Z[zeta_{self.n}], got {self.family.ring}")
        if self.system.n != self.n:
            raise ConfigInvalid(f"prime system is for Z[zeta_{self.system.n}], family for Z[zeta_{self.n}]")
        if self.family.max_norm > self.f_k:
            raise ConfigInvalid(f"family sup norm {self.family.max_norm} exceeds f_k = {self.f_k}")
        small = [q for q in self.system.primes if q <= self.f_k]
        if small:
            raise ConfigInvalid(f"primes {small} do not exceed f_k = {self.f_k}; family elements would not be units")

    @property
    def d(self) -> int:
        return self.family.ring.d

    @property
    def Q(self) -> int:  # pylint: disable=invalid-name
        return self.system.Q

    @property
    def ring(self) -> RingContext:
        return self.family.ring

    def dump(self) -> dict:
        return {"n": self.n, "d": self.d, "family": self.family.dump(), "f_k": self.f_k,
                "prime_index_range": [self.f_k, 2 * self.f_k], "system": self.system.dump(),
                "Q": self.Q, "truncated": self.truncated}


def qr_family(n: int, values: Iterable[Any], strict_coordinates: bool = True) -> PatternFamily:
    """A family in Z^d; plain integers are accepted for n = 2."""
    ring = RingContext.cyclotomic(n)
    vectors = [(value,) if isinstance(value, int) else tuple(value) for value in values]
    return PatternFamily.of(vectors, ring, label=f"U/Z[zeta_{n}]", strict_coordinates=strict_coordinates)


def default_prime_system(n: int, f_k: int, d: int, cap: int = QR_CAP) -> PrimeSystem:
    """Primes of index f_k..2 f_k in the inert residue class, dropped from the top while Q^d > cap.

    At least one prime is always kept.
    """
    system = find_prime_system(n, PRIMITIVE_ROOTS[n], max(f_k, 1), 2 * max(f_k, 1))
    primes = list(system.primes)
    while len(primes) > 1 and math.prod(primes) ** d > cap:
        primes.pop()
    if len(primes) < system.m:
        logger.warning(f"prime system cut from {system.m} to {len(primes)} primes to keep Q^{d} within {cap}")
    return PrimeSystem(n=n, a=system.a, primes=tuple(primes), first_index=system.first_index)


def qr_params(n: int, family: PatternFamily, primes: Optional[Sequence[int]] = None,
              cap: int = QR_CAP) -> QRParams:
    """f_k is the sup norm of U; without explicit primes the default system is used."""
    f_k = family.max_norm
    d = family.ring.d
    if primes:
        system = PrimeSystem.explicit(n, primes)
    else:
        system = default_prime_system(n, f_k, d, cap)
    if f_k ** d < family.k:
        logger.warning(f"f_k^d = {f_k ** d} is below k = {family.k}; the family cannot fit its norm bound")
    return QRParams(n, family, system, f_k, truncated=not primes and system.m < max(f_k, 1) + 1)


def qr_scale(x: Any, system: PrimeSystem) -> tuple:
    """r(x): the CRT lift of the squares of the residues of x, coefficients in [0, Q)."""
    ring = system.ring
    residues = []
    for residue, q in zip(crt_split(x, system), system.primes):
        residues.append(tuple(c % q for c in ring.multiply(residue, residue)))
    return crt_lift(residues, system).coeffs
