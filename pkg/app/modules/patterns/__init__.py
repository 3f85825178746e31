# -*- coding: utf-8 -*-
from modules.patterns.rings import Element, RingContext, RingKind
from modules.patterns.ranges import IntRange, ScaleRange
from modules.patterns.family import PatternFamily, PatternInstance, PatternSet
from modules.patterns.core import (
    instantiate_pattern, basepoints_covered, verify_cover, require_cover, normalize_to_integers
)
from modules.patterns.transfer import (
    HarmonicCover, ProgressionCover, harmonic_to_arithmetic, arithmetic_to_harmonic, factorial_embed_check
)
from modules.patterns.codec import parse_family, family_from_json
