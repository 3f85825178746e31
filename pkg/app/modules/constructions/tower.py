# -*- coding: utf-8 -*-
from dataclasses import dataclass, field
from typing import Dict, List, Tuple
from loguru import logger
from modules.errors import ConfigInvalid, InvalidCover
from modules.patterns import PatternFamily, PatternSet, RingContext, require_cover


@dataclass(frozen=True)
class TowerState:
    """One level of the self-similar tower for U = [k].

    ``witnesses`` maps every s in S to a scale r with s + r*[k] inside B.
    """
    level: int
    k: int
    points: Tuple[int, ...]
    witnesses: Dict[int, int]
    t_history: Tuple[int, ...] = ()

    @property
    def basepoints(self) -> Tuple[int, ...]:
        return tuple(sorted(self.witnesses))

    @property
    def family(self) -> PatternFamily:
        return PatternFamily.of(range(1, self.k + 1), RingContext.integers(), f"[{self.k}]")

    def sizes_hold(self) -> bool:
        return (len(self.points) == self.k ** self.level
                and len(self.witnesses) == self.level * self.k ** (self.level - 1))

    def verify(self):
        if not self.sizes_hold():
            raise InvalidCover(f"tower level {self.level} has |B|={len(self.points)}, |S|={len(self.witnesses)}")
        require_cover(PatternSet.of(RingContext.integers(), self.points), self.family, self.witnesses.items())

    def dump(self) -> dict:
        return {"level": self.level, "k": self.k, "B": list(self.points), "S": list(self.basepoints),
                "witnesses": [[s, r] for s, r in sorted(self.witnesses.items())], "t_history": list(self.t_history),
                "stats": {"B": len(self.points), "S": len(self.witnesses)}}


def tower_initial(k: int) -> TowerState:
    if k < 1:
        raise ConfigInvalid(f"tower needs k >= 1, got {k}")
    return TowerState(1, k, tuple(range(1, k + 1)), {0: 1})


def _grow(state: TowerState, t: int) -> Tuple[Tuple[int, ...], Dict[int, int]]:
    points = sorted({j * t + b for j in range(state.k) for b in state.points})
    witnesses = {}
    for j in range(state.k):
        for s, r in state.witnesses.items():
            witnesses.setdefault(j * t + s, r)
    for b in state.points:
        witnesses.setdefault(b - t, t)
    return tuple(points), witnesses


def tower_step(state: TowerState) -> TowerState:
    """Stack k translated copies of the level and add the new basepoints -t + B.

    t starts at the least value with min(t + S) > max(B) and grows until the new level has
    exactly k^(n+1) points and (n+1)k^n basepoints.
    """
    t = max(state.points) - min(state.witnesses) + 1
    while True:
        points, witnesses = _grow(state, t)
        candidate = TowerState(state.level + 1, state.k, points, witnesses, state.t_history + (t,))
        if candidate.sizes_hold():
            break
        logger.debug(f"tower t={t} collides at level {candidate.level}, trying {t + 1}")
        t += 1
    candidate.verify()
    return candidate


def tower(k: int, levels: int) -> List[TowerState]:
    """Every level from 1 up to ``levels``, each one re-verified."""
    if levels < 1:
        raise ConfigInvalid(f"tower needs at least one level, got {levels}")
    states = [tower_initial(k)]
    states[0].verify()
    while len(states) < levels:
        states.append(tower_step(states[-1]))
    logger.info(f"tower k={k}: |B|={len(states[-1].points)}, |S|={len(states[-1].witnesses)} at level {levels}")
    return states
