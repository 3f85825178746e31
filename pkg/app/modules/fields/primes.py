# -*- coding: utf-8 -*-
from typing import Dict, List, Mapping, Sequence, Union
from loguru import logger
from sympy import primerange
from modules.errors import ConfigInvalid, NoPrimeFound


def choose_projection_prime(scales: Union[Sequence[int], Mapping[int, int]]) -> int:
    """Least prime p in (N, 2N] dividing none of the witness scales r(1), ..., r(N).

    :param scales: the scales in basepoint order, or a basepoint -> scale map.
    :raises NoPrimeFound: every candidate prime divides some scale; ``details`` lists which.
    """
    if isinstance(scales, Mapping):
        scales = [scales[x] for x in sorted(scales)]
    scales = list(scales)
    n = len(scales)
    if n < 2:
        raise ConfigInvalid(f"prime choice needs N >= 2 scales, got {n}")
    if any(r == 0 for r in scales):
        raise ConfigInvalid("witness scales must be nonzero")
    blocked: Dict[int, List[int]] = {}
    for p in primerange(n + 1, 2 * n + 1):
        hits = [x for x, r in enumerate(scales, start=1) if r % p == 0]
        if not hits:
            logger.debug(f"prime {p} in ({n}, {2 * n}] divides no scale")
            return int(p)
        blocked[int(p)] = hits
    raise NoPrimeFound(f"every prime in ({n}, {2 * n}] divides a witness scale",
                       {str(p): hits for p, hits in blocked.items()})
