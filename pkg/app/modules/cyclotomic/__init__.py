# -*- coding: utf-8 -*-
from modules.cyclotomic.ring import (
    CyclotomicRing, CyclotomicElement, NormBound, otimes, norm_bound_check, elements
)
from modules.cyclotomic.primes import (
    PrimeSystem, PrimorialRatio, find_prime_system, crt_split, crt_lift, primorial_ratio, is_inert,
    residue_class
)
