# -*- coding: utf-8 -*-
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence
from loguru import logger
from modules.errors import ConfigInvalid, InvalidCover, TooLarge
from modules.patterns import Element, PatternFamily, PatternSet, RingContext, verify_cover
from modules.solver import Budget, CoverProblem, Demand, solve_min_cover

EXACT_CAP = 10_000


@dataclass(frozen=True)
class FieldCover:
    """A set in F_p^n with a nonzero witness scale for each covered basepoint.

    Residues are ints in [0, p) for n = 1 and tuples of them otherwise.
    """
    p: int
    n: int
    family: PatternFamily
    points: FrozenSet[Element]
    witnesses: Dict[Element, Element]
    certified: bool = False

    @property
    def ring(self) -> RingContext:
        return RingContext.field(self.p, self.n)

    @property
    def size(self) -> int:
        return len(self.points)

    def failures(self):
        return verify_cover(PatternSet(self.ring, self.points), self.family, self.witnesses.items())

    def verify(self) -> bool:
        return not self.failures()

    def require(self):
        failures = self.failures()
        if failures:
            raise InvalidCover(f"{len(failures)} field patterns leave the cover",
                               {"failures": [[self.ring.dump(x), self.ring.dump(r)] for x, r in failures[:20]]})

    def covers_everything(self) -> bool:
        return len(self.witnesses) == self.p ** self.n

    def dump(self) -> dict:
        ring = self.ring
        return {"p": self.p, "n": self.n, "family": self.family.dump(), "size": self.size,
                "A": [ring.dump(point) for point in sorted(self.points)],
                "witnesses": [[ring.dump(x), ring.dump(r)] for x, r in sorted(self.witnesses.items())],
                "certified": self.certified}


def field_family(p: int, n: int, elements: Iterable[int]) -> PatternFamily:
    """pi_p(U) over F_p^n; elements colliding mod p are rejected by the family itself."""
    return PatternFamily.of(list(elements), RingContext.field(p, n), label="U")


def ff_min_cover(p: int, n: int, elements: Iterable[int], demand: Optional[Iterable] = None,
                 budget: Budget = Budget()) -> FieldCover:
    """Smallest set of F_p^n with a pattern at every demanded basepoint (all of F_p^n by default)."""
    if p ** n > EXACT_CAP:
        raise TooLarge(f"F_{p}^{n} has {p ** n} elements, exact search stops at {EXACT_CAP}")
    family = field_family(p, n, elements)
    ring = family.ring
    targets = [ring.coerce(x) for x in demand] if demand is not None else list(ring.points(None))
    solution = solve_min_cover(CoverProblem(family, Demand.every_basepoint(targets)), budget)
    if solution.size > p ** n:
        raise InvalidCover(f"cover of size {solution.size} exceeds the whole field")
    logger.info(f"g over F_{p}^{n} for {family}: {solution.size}")
    return FieldCover(p, n, family, solution.cover.points, dict(solution.witnesses), solution.certified_optimal)


def product_cover(cover: FieldCover, n_target: int) -> FieldCover:
    """A^n with coordinatewise witness scales (r(x_1), ..., r(x_n))."""
    if cover.n != 1:
        raise ConfigInvalid(f"product cover needs a one dimensional cover, got dimension {cover.n}")
    if n_target < 1:
        raise ConfigInvalid(f"target dimension must be positive, got {n_target}")
    if n_target == 1:
        return cover
    family = field_family(cover.p, n_target, cover.family.elements)
    points = frozenset(itertools.product(sorted(cover.points), repeat=n_target))
    witnesses = {x: tuple(cover.witnesses[c] for c in x)
                 for x in itertools.product(sorted(cover.witnesses), repeat=n_target)}
    product = FieldCover(cover.p, n_target, family, points, witnesses)
    product.require()
    return product


def project_to_field(points: Iterable[int], witnesses: Mapping[int, int], elements: Sequence[int],
                     p: int) -> FieldCover:
    """pi_p of an integer cover; basepoints must stay distinct and scales nonzero mod p."""
    family = field_family(p, 1, elements)
    mapped = {}
    for x, r in witnesses.items():
        if r % p == 0:
            raise InvalidCover(f"scale {r} of basepoint {x} vanishes mod {p}")
        if x % p in mapped:
            raise InvalidCover(f"basepoints collide mod {p} at {x % p}")
        mapped[x % p] = r % p
    cover = FieldCover(p, 1, family, frozenset(x % p for x in points), mapped)
    cover.require()
    return cover
