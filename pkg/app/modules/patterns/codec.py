# -*- coding: utf-8 -*-
import json
import re
from fractions import Fraction
from typing import Any, Optional
from modules.errors import ConfigInvalid
from modules.patterns.family import PatternFamily, is_fraction_family
from modules.patterns.rings import RingContext

_HARMONIC = re.compile(r"^\s*1\s*/\s*\[\s*(\d+)\s*\]\s*$")
_INTERVAL = re.compile(r"^\s*\[\s*(\d+)\s*\]\s*$")


def _scalar(token: str):
    value = Fraction(token.strip())
    return value.numerator if value.denominator == 1 else value


def parse_family(text: str, ring: Optional[RingContext] = None, label: str = "") -> PatternFamily:
    """Read a family from the command line.

    Accepts ``1,2,3``, ``{1,2}``, ``1/2,1/3``, ``[k]``, ``1/[k]`` and the JSON object form.
    """
    text = text.strip()
    if text.startswith("{") and ":" in text:
        try:
            return family_from_json(json.loads(text))
        except json.JSONDecodeError as ex:
            raise ConfigInvalid(f"malformed family JSON: {ex}") from ex
    if match := _HARMONIC.match(text):
        k = int(match.group(1))
        values = [Fraction(1, i) for i in range(1, k + 1)]
        return PatternFamily.of(values, ring or RingContext.rationals(), label or f"1/[{k}]")
    if match := _INTERVAL.match(text):
        k = int(match.group(1))
        return PatternFamily.of(range(1, k + 1), ring or RingContext.integers(), label or f"[{k}]")
    tokens = [token for token in text.strip("{}").split(",") if token.strip()]
    try:
        values = [_scalar(token) for token in tokens]
    except (ValueError, ZeroDivisionError) as ex:
        raise ConfigInvalid(f"malformed family '{text}'") from ex
    if ring is None:
        ring = RingContext.rationals() if is_fraction_family(values) else RingContext.integers()
    return PatternFamily.of(values, ring, label)


def family_from_json(payload: Any) -> PatternFamily:
    """Inverse of :meth:`PatternFamily.dump`; rationals may be ``"p/q"`` strings."""
    if not isinstance(payload, dict) or "elements" not in payload:
        raise ConfigInvalid("family JSON needs an 'elements' list")
    ring = RingContext.from_description(payload.get("ring", "integers"))
    values = [_scalar(value) if isinstance(value, str) else tuple(value) if isinstance(value, list) else value
              for value in payload["elements"]]
    return PatternFamily.of(values, ring, payload.get("label", ""),
                            strict_coordinates=payload.get("strict_coordinates", True))
