"""
4x4 intra prediction with a six-mode set.

Reference samples are gathered from the reconstructed plane: eight above
(``T[0..7]``, the last four from the above-right block), four to the left
(``L[0..3]``) and the above-left corner ``C``. Missing samples are
substituted so every mode formula can be evaluated unconditionally.

:func:`prepare_references` works on one block; :func:`prepare_all_references`
builds the same thing for every block of a plane at once (valid for the
encoder since lossless reconstruction equals the source). :func:`predict`
broadcasts over any leading batch shape.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

BLOCK = 4
MID_GREY = 128


class IntraMode(enum.IntEnum):
    DC = 0
    VERTICAL = 1
    HORIZONTAL = 2
    PLANAR = 3
    DIAG_DOWN_LEFT = 4
    DIAG_DOWN_RIGHT = 5


@dataclass
class ReferenceSamples:
    top: np.ndarray  # (..., 8)
    left: np.ndarray  # (..., 4)
    corner: np.ndarray  # (...)
    top_available: np.ndarray  # (...) bool
    left_available: np.ndarray  # (...) bool
    above_right_available: np.ndarray  # (...) bool

    @classmethod
    def constant(cls, value: int = MID_GREY) -> "ReferenceSamples":
        return cls(
            top=np.full(8, value, dtype=np.int64),
            left=np.full(4, value, dtype=np.int64),
            corner=np.int64(value),
            top_available=np.bool_(True),
            left_available=np.bool_(True),
            above_right_available=np.bool_(True),
        )


def prepare_references(plane: np.ndarray, y: int, x: int) -> ReferenceSamples:
    """References for the block at ``(y, x)`` of a raster-coded plane.

    ``plane`` must already hold the reconstruction of every block before
    ``(y, x)`` in raster order; its dimensions are multiples of 4.
    """
    height, width = plane.shape
    has_top = y > 0
    has_left = x > 0
    has_above_right = has_top and x + BLOCK < width

    top = np.empty(8, dtype=np.int64)
    left = np.empty(4, dtype=np.int64)
    if has_top:
        top[:4] = plane[y - 1, x : x + 4]
        top[4:] = plane[y - 1, x + 4 : x + 8] if has_above_right else top[3]
    if has_left:
        left[:] = plane[y : y + 4, x - 1]
    if not has_top:
        top[:] = left[0] if has_left else MID_GREY
    if not has_left:
        left[:] = top[0] if has_top else MID_GREY

    if has_top and has_left:
        corner = plane[y - 1, x - 1]
    elif has_top:
        corner = top[0]
    elif has_left:
        corner = left[0]
    else:
        corner = MID_GREY

    return ReferenceSamples(
        top=top,
        left=left,
        corner=np.int64(corner),
        top_available=np.bool_(has_top),
        left_available=np.bool_(has_left),
        above_right_available=np.bool_(has_above_right),
    )


def prepare_all_references(plane: np.ndarray) -> ReferenceSamples:
    """Vectorized :func:`prepare_references` for every block of ``plane``.

    Fields gain a leading ``(blocks_y, blocks_x)`` shape.
    """
    plane = np.asarray(plane, dtype=np.int64)
    height, width = plane.shape
    by, bx = height // BLOCK, width // BLOCK

    # row above / column left of every block, with a one-block margin so the
    # slicing below never runs off the edge; margins are overwritten by the
    # substitution rules
    above = np.full((by, width + 2 * BLOCK), MID_GREY, dtype=np.int64)
    above[1:, BLOCK : BLOCK + width] = plane[BLOCK - 1 : height - 1 : BLOCK]
    above = above[:, BLOCK:]
    top = np.empty((by, bx, 8), dtype=np.int64)
    for j in range(8):
        top[:, :, j] = above[:, j : j + width : BLOCK][:, :bx]

    left = np.empty((by, bx, 4), dtype=np.int64)
    left[:, 1:, :] = plane[:, BLOCK - 1 : width - 1 : BLOCK].reshape(by, BLOCK, bx - 1).transpose(0, 2, 1)
    corner = np.empty((by, bx), dtype=np.int64)
    corner[1:, 1:] = plane[BLOCK - 1 : height - 1 : BLOCK, BLOCK - 1 : width - 1 : BLOCK]

    rows = np.arange(by)[:, None]
    cols = np.arange(bx)[None, :]
    has_top = np.broadcast_to(rows > 0, (by, bx))
    has_left = np.broadcast_to(cols > 0, (by, bx))
    has_above_right = has_top & (cols < bx - 1)

    top[:, :, 4:] = np.where(has_above_right[..., None], top[:, :, 4:], top[:, :, 3:4])
    left_fill = np.where(has_left, left[:, :, 0], MID_GREY)
    top = np.where(has_top[..., None], top, left_fill[..., None])
    top_fill = np.where(has_top, top[:, :, 0], MID_GREY)
    left = np.where(has_left[..., None], left, top_fill[..., None])
    corner = np.where(
        has_top & has_left,
        corner,
        np.where(has_top, top[:, :, 0], np.where(has_left, left[:, :, 0], MID_GREY)),
    )
    return ReferenceSamples(top, left, corner, has_top, has_left, has_above_right)


_R = np.arange(4)[:, None]
_C = np.arange(4)[None, :]
_DDL_TAPS = (np.minimum(_R + _C, 6), np.minimum(_R + _C + 1, 7), np.minimum(_R + _C + 2, 7))
# positions into the extended array [L3, L2, L1, L0, C, T0..T7] (E[-5..7])
_DDR_TAPS = (_C - _R - 1 + 5, _C - _R + 5, _C - _R + 1 + 5)


def _dc(refs: ReferenceSamples) -> np.ndarray:
    top_sum = refs.top[..., :4].sum(axis=-1)
    left_sum = refs.left.sum(axis=-1)
    both = (top_sum + left_sum + 4) >> 3
    top_only = (top_sum + 2) >> 2
    left_only = (left_sum + 2) >> 2
    dc = np.where(
        refs.top_available & refs.left_available,
        both,
        np.where(refs.top_available, top_only, np.where(refs.left_available, left_only, MID_GREY)),
    )
    return np.broadcast_to(np.asarray(dc)[..., None, None], dc.shape + (4, 4))


def predict(refs: ReferenceSamples, mode: IntraMode) -> np.ndarray:
    """Predicted ``(..., 4, 4)`` block for ``mode``.

    Raises ``ValueError`` for a mode value outside the six-mode set.
    """
    mode = IntraMode(mode)
    T, L = refs.top, refs.left
    if mode is IntraMode.DC:
        pred = _dc(refs)
    elif mode is IntraMode.VERTICAL:
        pred = np.broadcast_to(T[..., None, :4], T.shape[:-1] + (4, 4))
    elif mode is IntraMode.HORIZONTAL:
        pred = np.broadcast_to(L[..., :, None], L.shape[:-1] + (4, 4))
    elif mode is IntraMode.PLANAR:
        pred = (
            (3 - _C) * L[..., :, None]
            + (_C + 1) * T[..., 4, None, None]
            + (3 - _R) * T[..., None, :4]
            + (_R + 1) * L[..., 3, None, None]
            + 4
        ) >> 3
    elif mode is IntraMode.DIAG_DOWN_LEFT:
        a, b, c = (T[..., idx] for idx in _DDL_TAPS)
        pred = (a + 2 * b + c + 2) >> 2
    else:
        ext = np.concatenate([L[..., ::-1], np.asarray(refs.corner)[..., None], T], axis=-1)
        a, b, c = (ext[..., idx] for idx in _DDR_TAPS)
        pred = (a + 2 * b + c + 2) >> 2
    return np.array(pred, dtype=np.int64)


def residual(block, pred) -> np.ndarray:
    return np.asarray(block, dtype=np.int64) - np.asarray(pred, dtype=np.int64)


def reconstruct(pred, res) -> np.ndarray:
    return np.asarray(pred, dtype=np.int64) + np.asarray(res, dtype=np.int64)
