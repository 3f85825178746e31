# -*- coding: utf-8 -*-
from modules.geometry.bounds import (BoundEntry, BoundKind, BoundsRegistry, DimensionBounds, default_registry,
                                     dimension_bounds)
from modules.geometry.harmonic import HarmonicFamily, face_slots, harmonic_index_extract
from modules.geometry.lines import Cube, LineFamily, PairReport, line_family_setup
from modules.geometry.polytope import (HarmonicPolygon, Hyperplane, PolytopeSpec, diamond, direction_from_slope,
                                       harmonic_polygon, hausdorff_to_circle, parse_coordinate, polytope,
                                       polytope_from_json, simplex, square, vertices)
