# -*- coding: utf-8 -*-
from modules.fields.cover import EXACT_CAP, FieldCover, ff_min_cover, field_family, product_cover, project_to_field
from modules.fields.lift import IntegerInstance, LiftResult, field_to_integer_instance, lift_cover
from modules.fields.primes import choose_projection_prime
from modules.fields.translates import TranslatedFieldCover, ff_translate_cover
