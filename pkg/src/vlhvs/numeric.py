"""Shared numeric helpers: bit-depth arithmetic and deterministic rounding."""

from __future__ import annotations

import operator

import numpy as np

from .errors import DomainError

MIN_DEPTH = 8
MAX_DEPTH = 16


def check_depth(depth: int) -> int:
    """Validate a sample bit depth and return it as a plain int."""
    try:
        depth = operator.index(depth)
    except TypeError:
        raise DomainError(f"bit depth must be an integer, got {depth!r}") from None
    if not MIN_DEPTH <= depth <= MAX_DEPTH:
        raise DomainError(
            f"bit depth must lie in [{MIN_DEPTH}, {MAX_DEPTH}], got {depth}"
        )
    return depth


def max_code(depth: int) -> int:
    """Largest integer code value at the given bit depth (2**depth - 1)."""
    return (1 << check_depth(depth)) - 1


def dtype_for_depth(depth: int) -> np.dtype:
    """Narrowest unsigned dtype that holds codes of the given depth."""
    return np.dtype(np.uint8) if check_depth(depth) == 8 else np.dtype(np.uint16)


def round_half_away(x):
    """Round to the nearest integer with ties going away from zero.

    Accepts scalars or arrays and returns float64; callers cast to integer
    dtypes themselves. The fixed tie rule keeps every stage of the pipeline
    bit-reproducible, unlike the banker's rounding of the builtin round().
    """
    x = np.asarray(x, dtype=np.float64)
    return np.copysign(np.floor(np.abs(x) + 0.5), x)
