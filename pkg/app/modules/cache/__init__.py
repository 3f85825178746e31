# -*- coding: utf-8 -*-
from modules.cache.store import CacheReport, ResultCache
