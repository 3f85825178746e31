# -*- coding: utf-8 -*-
from modules.fractal.digits import Digit, DigitSystem, as_digit, digits_of, open_set_condition
from modules.fractal.attractor import (
    TRUNCATION_CAP, AttractorTruncation, BoxCount, attractor_dimension, box_count_estimate, box_counts,
    build_truncation, evaluate_string, moran_dimension
)
from modules.fractal.progressions import (
    Discretization, ProgressionCheck, ap_in_attractor_check, digit_system_from_cover, discretize_cover
)
