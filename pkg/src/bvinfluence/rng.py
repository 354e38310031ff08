"""Seeding policy shared by every stochastic routine in the package.

All randomness comes from numpy's PCG64 bit generator. Each call that
samples anything builds its own generator from an explicit integer seed,
so a (function, parameters, seed) triple always reproduces the same
output bit for bit, and independent calls never share stream state.
When a caller passes ``seed=None`` we draw a fresh 128-bit entropy seed
and hand it back, so the run is still reproducible after the fact.
"""

from __future__ import annotations

import numpy as np


def resolve_seed(seed: int | None) -> int:
    """Return ``seed`` as an int, drawing a fresh entropy seed for None."""
    if seed is None:
        return int(np.random.SeedSequence().entropy)
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    return int(seed)


def make_generator(seed: int) -> np.random.Generator:
    """One PCG64 stream per call; never reuse a generator across calls."""
    return np.random.Generator(np.random.PCG64(seed))
