# -*- coding: utf-8 -*-
from modules.constructions.seeds import DEFAULT_SEED, stream
from modules.constructions.powers import PowersCover, powers_of_two_cover
from modules.constructions.tower import TowerState, tower, tower_initial, tower_step
from modules.constructions.translates import (
    TRANSLATE_CONSTANT, TranslateCover, greedy_translates, random_translate_cover, random_translates,
    translate_bound
)
from modules.constructions.projections import (
    DISTINGUISHED, AmplifiedSystem, ProjectionSystem, amplify, parse_slope, project, projection_system_from_json,
    slope_text, tensor_power
)
from modules.constructions.encoding import (
    EncodedCover, LinearEncoding, encode_nd_to_1d, encode_progression_cover
)
from modules.constructions.reduction import PhiTheta, Reduction, phi_theta_reduce, sample_theta
