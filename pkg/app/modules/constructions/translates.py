# -*- coding: utf-8 -*-
import math
import operator
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, List, Sequence, Set
from loguru import logger
from modules.errors import ConfigInvalid, InvalidCover, SeedExhausted
from modules.constructions.seeds import DEFAULT_SEED, stream

TRANSLATE_CONSTANT = 4
RANDOM_ATTEMPTS = 64


@dataclass(frozen=True)
class TranslateCover:
    translates: List
    bound: float
    mode: str

    @property
    def size(self) -> int:
        return len(self.translates)

    def dump(self) -> dict:
        return {"T": list(self.translates), "size": self.size, "bound": self.bound, "mode": self.mode}


def greedy_translates(shape: Iterable[Hashable], target: Iterable[Hashable], candidates: Sequence[Hashable],
                      shift: Callable) -> List:
    """Greedy set cover of ``target`` by translates shape + t, ties going to the earliest candidate."""
    shape, remaining = list(shape), set(target)
    images = {t: {shift(s, t) for s in shape} & remaining for t in candidates}
    chosen = []
    while remaining:
        best, gain = None, 0
        for t in candidates:
            count = len(images[t] & remaining)
            if count > gain:
                best, gain = t, count
        if best is None:
            raise InvalidCover("translates cannot reach the whole target", {"uncovered": len(remaining)})
        chosen.append(best)
        remaining -= images[best]
    return chosen


def _prune(shape: List, target: Set, translates: List, shift: Callable) -> List:
    kept = list(translates)
    for t in list(translates):
        trial = [other for other in kept if other != t]
        covered = {shift(s, other) for s in shape for other in trial}
        if target <= covered:
            kept = trial
    return kept


def random_translates(shape: Iterable[Hashable], target: Iterable[Hashable], candidates: Sequence[Hashable],
                      shift: Callable, draws: int, seed: int) -> List:
    """Uniform random translates, redrawn until they cover, then pruned of redundant ones."""
    shape, target = list(shape), set(target)
    rng = stream(seed, "translates")
    for attempt in range(RANDOM_ATTEMPTS):
        picks = [candidates[int(i)] for i in rng.integers(0, len(candidates), size=draws)]
        covered = {shift(s, t) for s in shape for t in picks}
        if target <= covered:
            logger.debug(f"random translates covered the target on attempt {attempt + 1}")
            return sorted(_prune(shape, target, sorted(set(picks)), shift))
    raise SeedExhausted(f"random translates failed {RANDOM_ATTEMPTS} times", {"draws": draws, "seed": seed})


def translate_bound(total: int, shape: int, log_factor: float) -> float:
    return TRANSLATE_CONSTANT * (total / shape) * max(1.0, log_factor)


def random_translate_cover(shape: Iterable[int], x: int, seed: int = DEFAULT_SEED,
                           randomized: bool = False) -> TranslateCover:
    """A set T with S + T covering {1, ..., X}.

    The greedy derandomization is the default; ``randomized`` draws uniform translates instead.
    Both stay within 4 (X/|S|) log X.
    """
    shape = sorted(set(shape))
    if not shape:
        raise ConfigInvalid("translate shape must be nonempty")
    if x < 1:
        raise ConfigInvalid(f"target length must be positive, got {x}")
    target = range(1, x + 1)
    candidates = list(range(1 - max(shape), x - min(shape) + 1))
    bound = translate_bound(x, len(shape), math.log(x) if x > 1 else 0.0)
    if randomized:
        draws = max(1, math.ceil(2 * (x / len(shape)) * max(1.0, math.log(x) if x > 1 else 0.0)))
        translates = random_translates(shape, target, candidates, operator.add, draws, seed)
        mode = "random"
    else:
        translates = sorted(greedy_translates(shape, target, candidates, operator.add))
        mode = "greedy"
    if len(translates) > bound:
        raise InvalidCover(f"{len(translates)} translates exceed the bound {bound:.2f}")
    return TranslateCover(translates, bound, mode)
