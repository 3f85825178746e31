# -*- coding: utf-8 -*-
import math
from dataclasses import dataclass
from typing import List
from loguru import logger
from modules.errors import ConfigInvalid, InvalidCover
from modules.constructions import greedy_translates, translate_bound
from modules.fields.cover import FieldCover


@dataclass(frozen=True)
class TranslatedFieldCover:
    translates: List
    cover: FieldCover
    bound: float

    def dump(self) -> dict:
        ring = self.cover.ring
        return {"T": [ring.dump(t) for t in self.translates], "bound": self.bound, "cover": self.cover.dump()}


def ff_translate_cover(cover: FieldCover) -> TranslatedFieldCover:
    """Spread a partial field cover over all of F_p^n with translates A + T.

    T comes from greedy set cover of F_p^n by translates of the covered basepoints S, and stays
    below 4 (p^n/|S|) n log p.
    """
    if not cover.witnesses:
        raise ConfigInvalid("translate covering needs at least one covered basepoint")
    cover.require()
    ring = cover.ring
    everything = list(ring.points(None))
    shape = sorted(cover.witnesses)
    translates = sorted(greedy_translates(shape, everything, everything, ring.add))
    bound = translate_bound(cover.p ** cover.n, len(shape), cover.n * math.log(cover.p))
    if len(translates) > bound:
        raise InvalidCover(f"{len(translates)} translates exceed the bound {bound:.2f}")
    points = frozenset(ring.add(a, t) for a in cover.points for t in translates)
    witnesses = {}
    for t in translates:
        for x in shape:
            witnesses.setdefault(ring.add(x, t), cover.witnesses[x])
    spread = FieldCover(cover.p, cover.n, cover.family, points, dict(sorted(witnesses.items())))
    spread.require()
    logger.debug(f"{len(translates)} translates spread {len(shape)} basepoints over F_{cover.p}^{cover.n}")
    return TranslatedFieldCover(translates, spread, bound)
