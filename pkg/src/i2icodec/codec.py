"""
Lossless 4x4 block codec with four residual-processing systems.

Stream layout (all multi-byte fields big-endian)::

    "I2IL" | version=1 | system | width:u16 | height:u16 | bitdepth=8
    then, for each 4x4 block of the edge-padded plane in raster order:
    mode:3 | k:3 | 16 Rice codewords (raster order within the block)
    then zero padding to a byte boundary.

The residual route for a block is a pure function of (system, mode), so no
routing flags are transmitted.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .entropy import (
    K_BITS,
    BitReader,
    BitWriter,
    DecodeError,
    decode_values,
    encode_values,
    k_costs,
)
from .intra import (
    BLOCK,
    IntraMode,
    ReferenceSamples,
    predict,
    prepare_all_references,
    prepare_references,
    residual,
)
from .rdpcm import RdpcmDirection, rdpcm_forward, rdpcm_inverse
from .transforms import i2i_dct4_2d_forward, i2i_dct4_2d_inverse

MAGIC = b"I2IL"
VERSION = 1
BITDEPTH = 8
HEADER = struct.Struct(">4sBBHHB")
MODE_BITS = 3
NUM_MODES = len(IntraMode)


class SystemId(enum.IntEnum):
    NONE = 0  # raw residual (HEVC v1 lossless analog)
    RDPCM = 1  # H/V RDPCM for H/V modes (HEVC v2 analog)
    I2I = 2
    I2I_RDPCM = 3

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def from_label(cls, label: str) -> "SystemId":
        return cls[label.upper().replace("-", "_")]


class Route(str, enum.Enum):
    NONE = "-"
    RDPCM_H = "h rdpcm"
    RDPCM_V = "v rdpcm"
    I2I = "i2i"


_STAGE = {Route.NONE: "residual", Route.RDPCM_H: "rdpcm", Route.RDPCM_V: "rdpcm", Route.I2I: "coeff"}


def route_for(system: SystemId, mode: IntraMode) -> Route:
    system, mode = SystemId(system), IntraMode(mode)
    hv = {IntraMode.HORIZONTAL: Route.RDPCM_H, IntraMode.VERTICAL: Route.RDPCM_V}
    if system is SystemId.NONE:
        return Route.NONE
    if system is SystemId.RDPCM:
        return hv.get(mode, Route.NONE)
    if system is SystemId.I2I:
        return Route.I2I
    return hv.get(mode, Route.I2I)


def route_residual(res, mode: IntraMode, system: SystemId) -> tuple[np.ndarray, str]:
    """Process a residual block (or batch) before entropy coding.

    Returns the processed block and its stage tag
    (``"residual"``, ``"rdpcm"`` or ``"coeff"``).
    """
    route = route_for(system, mode)
    res = np.asarray(res, dtype=np.int64)
    if route is Route.RDPCM_H:
        out = rdpcm_forward(res, RdpcmDirection.HORIZONTAL)
    elif route is Route.RDPCM_V:
        out = rdpcm_forward(res, RdpcmDirection.VERTICAL)
    elif route is Route.I2I:
        out = i2i_dct4_2d_forward(res)
    else:
        out = res.copy()
    return out, _STAGE[route]


def unroute_residual(block, mode: IntraMode, system: SystemId) -> np.ndarray:
    route = route_for(system, mode)
    block = np.asarray(block, dtype=np.int64)
    if route is Route.RDPCM_H:
        return rdpcm_inverse(block, RdpcmDirection.HORIZONTAL)
    if route is Route.RDPCM_V:
        return rdpcm_inverse(block, RdpcmDirection.VERTICAL)
    if route is Route.I2I:
        return i2i_dct4_2d_inverse(block)
    return block.copy()


class BlockDecision(NamedTuple):
    mode: int
    k: int
    cost: int  # bits, including the mode and k fields
    values: np.ndarray  # 16 routed values in raster order


def _mode_costs(pixels, refs: ReferenceSamples, system: SystemId):
    """Per-mode best k, cost, and routed values; batched over leading axes."""
    pixels = np.asarray(pixels, dtype=np.int64)
    batch = pixels.shape[:-2]
    ks = np.empty(batch + (NUM_MODES,), dtype=np.int64)
    costs = np.empty(batch + (NUM_MODES,), dtype=np.int64)
    values = np.empty(batch + (NUM_MODES, 16), dtype=np.int64)
    for mode in IntraMode:
        routed, _ = route_residual(residual(pixels, predict(refs, mode)), mode, system)
        flat = routed.reshape(batch + (16,))
        per_k = k_costs(flat)
        ks[..., mode] = np.argmin(per_k, axis=-1)
        costs[..., mode] = MODE_BITS + K_BITS + per_k.min(axis=-1)
        values[..., mode, :] = flat
    return ks, costs, values


def encode_block(pixels, refs: ReferenceSamples, system: SystemId) -> BlockDecision:
    """Cheapest (mode, k) for one block; ties go to the lowest mode index."""
    ks, costs, values = _mode_costs(pixels, refs, system)
    mode = int(np.argmin(costs))
    return BlockDecision(mode, int(ks[mode]), int(costs[mode]), values[mode])


def write_block(w: BitWriter, decision: BlockDecision) -> None:
    w.write(decision.mode, MODE_BITS)
    w.write(decision.k, K_BITS)
    encode_values(decision.values, decision.k, w)


def pad_plane(plane: np.ndarray) -> np.ndarray:
    height, width = plane.shape
    return np.pad(plane, ((0, -height % BLOCK), (0, -width % BLOCK)), mode="edge")


@dataclass
class EncodePlan:
    """Per-block decisions for a whole plane, in raster block order."""

    system: SystemId
    width: int
    height: int
    modes: np.ndarray  # (N,)
    ks: np.ndarray  # (N,)
    costs: np.ndarray  # (N,)
    values: np.ndarray  # (N, 16)

    @property
    def payload_bits(self) -> int:
        return int(self.costs.sum())


def _check_plane(plane) -> np.ndarray:
    plane = np.asarray(plane)
    if plane.ndim != 2:
        raise ValueError(f"expected a single 2D plane, got shape {plane.shape}")
    height, width = plane.shape
    if not (1 <= width <= 0xFFFF and 1 <= height <= 0xFFFF):
        raise ValueError(f"unsupported plane size {width}x{height}")
    if plane.size and (plane.min() < 0 or plane.max() > 255):
        raise ValueError("plane samples must be 8-bit")
    return plane.astype(np.int64)


def plan_image(plane, system: SystemId) -> EncodePlan:
    """Mode decision for every block.

    In lossless coding the reconstruction equals the source, so the
    reference samples of all blocks are known up front and the decision is
    made for the whole plane in one vectorized pass.
    """
    system = SystemId(system)
    plane = _check_plane(plane)
    padded = pad_plane(plane)
    by, bx = padded.shape[0] // BLOCK, padded.shape[1] // BLOCK
    blocks = padded.reshape(by, BLOCK, bx, BLOCK).transpose(0, 2, 1, 3)
    refs = prepare_all_references(padded)
    ks, costs, values = _mode_costs(blocks, refs, system)
    modes = np.argmin(costs, axis=-1).reshape(-1)
    n = modes.size
    idx = np.arange(n)
    ks, costs, values = ks.reshape(n, -1), costs.reshape(n, -1), values.reshape(n, NUM_MODES, 16)
    return EncodePlan(
        system=system,
        width=plane.shape[1],
        height=plane.shape[0],
        modes=modes,
        ks=ks[idx, modes],
        costs=costs[idx, modes],
        values=values[idx, modes],
    )


def write_stream(plan: EncodePlan) -> bytes:
    w = BitWriter()
    w.write_bytes(HEADER.pack(MAGIC, VERSION, plan.system, plan.width, plan.height, BITDEPTH))
    for mode, k, cost, values in zip(plan.modes.tolist(), plan.ks.tolist(), plan.costs.tolist(), plan.values):
        write_block(w, BlockDecision(mode, k, cost, values))
    return w.getvalue()


def encode_image(plane, system: SystemId) -> bytes:
    return write_stream(plan_image(plane, system))


def read_header(data: bytes) -> tuple[SystemId, int, int]:
    if len(data) < HEADER.size:
        raise DecodeError("stream shorter than header")
    magic, version, system, width, height, bitdepth = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise DecodeError(f"bad magic {magic!r}")
    if version != VERSION:
        raise DecodeError(f"unsupported version {version}")
    if system > max(SystemId):
        raise DecodeError(f"unknown system id {system}")
    if bitdepth != BITDEPTH:
        raise DecodeError(f"unsupported bit depth {bitdepth}")
    if width < 1 or height < 1:
        raise DecodeError(f"invalid dimensions {width}x{height}")
    return SystemId(system), width, height


def decode_image(data: bytes) -> np.ndarray:
    """Decode a stream to a ``(height, width)`` uint8 plane."""
    system, width, height = read_header(data)
    pw, ph = width + (-width % BLOCK), height + (-height % BLOCK)
    by, bx = ph // BLOCK, pw // BLOCK

    # entropy decoding does not depend on reconstruction: parse everything first
    r = BitReader(data, HEADER.size)
    modes = np.empty(by * bx, dtype=np.int64)
    coded = np.empty((by * bx, 4, 4), dtype=np.int64)
    for i in range(by * bx):
        mode = r.read(MODE_BITS)
        if mode >= NUM_MODES:
            raise DecodeError(f"invalid intra mode {mode} in block {i}")
        k = r.read(K_BITS)
        modes[i] = mode
        coded[i] = np.reshape(decode_values(r, k, 16), (4, 4))
    r.check_padding()

    residuals = np.empty_like(coded)
    for mode in IntraMode:
        sel = modes == mode
        if sel.any():
            residuals[sel] = unroute_residual(coded[sel], mode, system)

    recon = np.zeros((ph, pw), dtype=np.int64)
    for i in range(by * bx):
        y, x = (i // bx) * BLOCK, (i % bx) * BLOCK
        pixels = predict(prepare_references(recon, y, x), modes[i]) + residuals[i]
        if pixels.min() < 0 or pixels.max() > 255:
            raise DecodeError(f"reconstructed samples out of range in block {i}")
        recon[y : y + BLOCK, x : x + BLOCK] = pixels
    return recon[:height, :width].astype(np.uint8)


@dataclass
class SystemRate:
    system: SystemId
    bits: int
    bpp: float
    reduction: float  # percent, relative to SystemId.NONE


def bitrate_report(plane, systems=tuple(SystemId)) -> list[SystemRate]:
    """Stream size for each system and percent reduction relative to NONE."""
    plane = np.asarray(plane)
    sizes = {s: 8 * len(encode_image(plane, s)) for s in set(systems) | {SystemId.NONE}}
    base = sizes[SystemId.NONE]
    return [
        SystemRate(s, sizes[s], sizes[s] / plane.size, 100.0 * (1.0 - sizes[s] / base))
        for s in systems
    ]
