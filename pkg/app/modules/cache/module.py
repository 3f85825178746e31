# -*- coding: utf-8 -*-
import os
from loguru import logger
import system
from modules.cache.store import ResultCache
from modules.workbench.verifiers import verify_record

enabled = True  # pylint: disable=C0103


def location(value: str) -> str:
    return value.replace("{root}", system.environment.root)


def bootstrap():
    """ result cache initialization, APP_CACHE overrides the configured path """
    settings = system.settings.cache
    system.runtime.cache = None
    if not settings.enabled:
        logger.debug("result cache disabled")
        return True
    path = os.getenv("APP_CACHE") or location(settings.path)
    quarantine = location(settings.quarantine) if not os.getenv("APP_CACHE") else None
    system.runtime.cache = ResultCache(path, quarantine, verifier=verify_record)
    return True
