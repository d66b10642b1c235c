"""Binary (P5) 8-bit PGM reading and writing."""

from __future__ import annotations

import os

import numpy as np


class PGMError(ValueError):
    pass


def _tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace-separated header tokens, skipping ``#`` comments.

    Returns the tokens and the offset of the single whitespace byte that
    terminates the last one.
    """
    tokens = []
    pos = 0
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos : pos + 1].isspace():
            pos += 1
        if pos < n and data[pos : pos + 1] == b"#":
            while pos < n and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < n and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise PGMError("truncated PGM header")
        tokens.append(data[start:pos])
    return tokens, pos


def parse_pgm(data: bytes) -> np.ndarray:
    if data[:2] != b"P5":
        raise PGMError(f"not a binary greyscale PGM (magic {data[:2]!r}); only P5 is supported")
    (magic, w, h, maxval), pos = _tokens(data, 4)
    try:
        width, height, maxval_i = int(w), int(h), int(maxval)
    except ValueError:
        raise PGMError("malformed PGM header") from None
    if magic != b"P5":
        raise PGMError(f"unsupported magic {magic!r}")
    if maxval_i != 255:
        raise PGMError(f"only maxval 255 is supported, got {maxval_i}")
    if width < 1 or height < 1:
        raise PGMError(f"invalid dimensions {width}x{height}")
    if pos >= len(data) or not data[pos : pos + 1].isspace():
        raise PGMError("truncated PGM header")
    start = pos + 1
    payload = data[start : start + width * height]
    if len(payload) < width * height:
        raise PGMError(f"truncated PGM payload: expected {width * height} bytes, got {len(payload)}")
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy()


def read_pgm(path: str | os.PathLike) -> np.ndarray:
    with open(path, "rb") as f:
        return parse_pgm(f.read())


def format_pgm(plane: np.ndarray) -> bytes:
    plane = np.asarray(plane)
    if plane.ndim != 2:
        raise PGMError(f"expected a 2D plane, got shape {plane.shape}")
    if plane.min() < 0 or plane.max() > 255:
        raise PGMError("samples outside [0, 255]")
    height, width = plane.shape
    return b"P5\n%d %d\n255\n" % (width, height) + plane.astype(np.uint8).tobytes()


def write_pgm(plane: np.ndarray, path: str | os.PathLike) -> None:
    with open(path, "wb") as f:
        f.write(format_pgm(plane))
