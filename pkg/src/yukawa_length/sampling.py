"""Seeded integer direction vectors.

The generator is numpy's PCG64 (the 128-bit-state, 64-bit-output XSL-RR
permuted congruential generator) seeded with the scenario seed through
``numpy.random.Generator(PCG64(seed))``; entries are drawn with
``Generator.integers(-bound, bound, endpoint=True)``. Same seed, same list.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidInput


def sample_directions(seed: int, trials: int, bound: int, dim: int) -> list[tuple[int, ...]]:
    if bound < 1:
        raise InvalidInput(f"bound must be >= 1 (got {bound})")
    if dim < 1:
        raise InvalidInput(f"dim must be >= 1 (got {dim})")
    if trials < 0:
        raise InvalidInput(f"trials must be >= 0 (got {trials})")
    if not 0 <= seed < 2**64:
        raise InvalidInput(f"seed must be a 64-bit unsigned integer (got {seed})")
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.integers(-bound, bound, size=(trials, dim), endpoint=True, dtype=np.int64)
    return [tuple(int(x) for x in row) for row in draws]
