"""
MSB-first bit I/O and the block Rice coder.

Each value is zig-zag mapped to a non-negative integer ``u`` and written as a
Rice codeword with parameter ``k``: ``q = u >> k`` ones, a terminating zero,
then the ``k`` low bits of ``u``. Quotients of 16 or more are escaped as
sixteen ones followed by ``u`` in a raw 16-bit field, which bounds every
codeword at 32 bits.
"""

from __future__ import annotations

import numpy as np

MAX_K = 7
K_BITS = 3
ESCAPE_Q = 16
ESCAPE_BITS = 16
ESCAPE_LENGTH = ESCAPE_Q + ESCAPE_BITS


class DecodeError(ValueError):
    """Malformed or truncated bitstream."""


class BitWriter:
    """Accumulates bits MSB-first; :meth:`getvalue` zero-pads to a byte."""

    def __init__(self):
        self._buf = bytearray()
        self._acc = 0
        self._nacc = 0
        self.bits_written = 0

    def write(self, value: int, nbits: int) -> None:
        if nbits == 0:
            return
        if value < 0 or value >> nbits:
            raise ValueError(f"{value} does not fit in {nbits} bits")
        self._acc = (self._acc << nbits) | value
        self._nacc += nbits
        self.bits_written += nbits
        while self._nacc >= 8:
            self._nacc -= 8
            self._buf.append((self._acc >> self._nacc) & 0xFF)
        self._acc &= (1 << self._nacc) - 1

    def write_bytes(self, data: bytes) -> None:
        for byte in data:
            self.write(byte, 8)

    def getvalue(self) -> bytes:
        out = bytearray(self._buf)
        if self._nacc:
            out.append((self._acc << (8 - self._nacc)) & 0xFF)
        return bytes(out)


class BitReader:
    def __init__(self, data: bytes, offset: int = 0):
        self._data = data
        self._pos = offset * 8  # absolute bit position
        self._end = len(data) * 8

    @property
    def position(self) -> int:
        return self._pos

    @property
    def bits_left(self) -> int:
        return self._end - self._pos

    def read(self, nbits: int) -> int:
        if nbits > self._end - self._pos:
            raise DecodeError("bitstream truncated")
        value = 0
        pos = self._pos
        remaining = nbits
        while remaining:
            byte = self._data[pos >> 3]
            avail = 8 - (pos & 7)
            take = min(avail, remaining)
            chunk = (byte >> (avail - take)) & ((1 << take) - 1)
            value = (value << take) | chunk
            pos += take
            remaining -= take
        self._pos = pos
        return value

    def read_ones(self, limit: int) -> int:
        """Count consecutive 1 bits, stopping after a 0 or at ``limit`` ones.

        The terminating 0 (if any) is consumed.
        """
        count = 0
        while count < limit:
            if self._pos >= self._end:
                raise DecodeError("bitstream truncated")
            bit = (self._data[self._pos >> 3] >> (7 - (self._pos & 7))) & 1
            self._pos += 1
            if not bit:
                return count
            count += 1
        return count

    def check_padding(self) -> None:
        """Require that only zero padding up to the next byte boundary remains."""
        if self._end - self._pos >= 8:
            raise DecodeError(f"{self._end - self._pos} trailing bits after payload")
        if self._pos < self._end and self.read(self._end - self._pos):
            raise DecodeError("non-zero padding bits")


def signed_to_unsigned(v):
    """Zig-zag map: 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ..."""
    if isinstance(v, np.ndarray):
        return np.where(v >= 0, 2 * v, -2 * v - 1)
    return 2 * v if v >= 0 else -2 * v - 1


def unsigned_to_signed(u):
    if isinstance(u, np.ndarray):
        return np.where(u & 1, -((u + 1) >> 1), u >> 1)
    return -((u + 1) >> 1) if u & 1 else u >> 1


def rice_length(u, k):
    """Codeword length in bits; vectorizes over numpy arrays."""
    q = u >> k
    if isinstance(q, np.ndarray):
        return np.where(q < ESCAPE_Q, q + 1 + k, ESCAPE_LENGTH)
    return q + 1 + k if q < ESCAPE_Q else ESCAPE_LENGTH


def rice_encode(u: int, k: int, w: BitWriter) -> None:
    if not 0 <= u < 1 << ESCAPE_BITS:
        raise ValueError(f"value {u} outside Rice coder range")
    q = u >> k
    if q < ESCAPE_Q:
        w.write(((1 << q) - 1) << 1, q + 1)
        w.write(u & ((1 << k) - 1), k)
    else:
        w.write((1 << ESCAPE_Q) - 1, ESCAPE_Q)
        w.write(u, ESCAPE_BITS)


def rice_decode(r: BitReader, k: int) -> int:
    q = r.read_ones(ESCAPE_Q)
    if q == ESCAPE_Q:
        return r.read(ESCAPE_BITS)
    return (q << k) | r.read(k)


def k_costs(values) -> np.ndarray:
    """Total Rice cost of a block for every ``k`` in ``0..7``.

    ``values`` has shape ``(..., n)`` (signed); the result is ``(..., 8)``.
    """
    u = signed_to_unsigned(np.asarray(values, dtype=np.int64))
    ks = np.arange(MAX_K + 1)
    return rice_length(u[..., None, :], ks[:, None]).sum(axis=-1)


def choose_k(values) -> int:
    """Rice parameter with the smallest exact cost (smallest ``k`` on ties)."""
    return int(np.argmin(k_costs(np.ravel(values))))


def encode_values(values, k: int, w: BitWriter) -> None:
    for v in np.ravel(values).tolist():
        rice_encode(signed_to_unsigned(v), k, w)


def decode_values(r: BitReader, k: int, count: int) -> list[int]:
    return [unsigned_to_signed(rice_decode(r, k)) for _ in range(count)]
