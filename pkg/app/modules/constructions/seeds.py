# -*- coding: utf-8 -*-
"""Seeded randomness. Every random draw in the workbench goes through a named child stream.

A run seed is split with ``SeedSequence.spawn``-style keys so that adding a new consumer never
shifts the numbers seen by an existing one.
"""
import zlib
import numpy as np

DEFAULT_SEED = 20240229


def stream(seed: int, name: str) -> np.random.Generator:
    """Generator for one named consumer of a run seed."""
    key = zlib.crc32(name.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(key,)))
