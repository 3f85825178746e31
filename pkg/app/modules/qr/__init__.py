# -*- coding: utf-8 -*-
from modules.qr.params import QR_CAP, QRParams, default_prime_system, qr_family, qr_params, qr_scale
from modules.qr.cover import QRCover, ResidueProjection, build_qr_cover, residue_projections
from modules.qr.power import (ExponentRow, Handoff, PowerExtension, attractor_handoff, digit_witnesses,
                              exponent_table, power_extend)
from modules.qr.polygon import LatticePolygon, PolygonCover, lattice_polygon, rotated_polygon_cover
