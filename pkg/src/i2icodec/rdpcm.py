"""Horizontal/vertical residual DPCM on 4x4 blocks (batched over leading axes)."""

from __future__ import annotations

import enum

import numpy as np


class RdpcmDirection(enum.IntEnum):
    HORIZONTAL = 0
    VERTICAL = 1


def _axis(direction: RdpcmDirection) -> int:
    return -1 if RdpcmDirection(direction) is RdpcmDirection.HORIZONTAL else -2


def rdpcm_forward(block, direction: RdpcmDirection) -> np.ndarray:
    """Subtract each sample's left (or upper) neighbour; the first column
    (or row) is passed through unchanged."""
    block = np.asarray(block, dtype=np.int64)
    return np.diff(block, axis=_axis(direction), prepend=0)


def rdpcm_inverse(block, direction: RdpcmDirection) -> np.ndarray:
    block = np.asarray(block, dtype=np.int64)
    return np.cumsum(block, axis=_axis(direction))
