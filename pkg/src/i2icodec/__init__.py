"""Lossless 4x4 block image codec comparing raw, RDPCM and i2i-DCT residual coding."""

from .codec import SystemId, bitrate_report, decode_image, encode_image
from .entropy import DecodeError
from .intra import IntraMode
from .pgm import PGMError, read_pgm, write_pgm
from .synth import Ar1Spec, gen_ar1
from .transforms import i2i_dct4_2d_forward, i2i_dct4_2d_inverse, i2i_dct4_forward, i2i_dct4_inverse

__all__ = [
    "Ar1Spec",
    "DecodeError",
    "IntraMode",
    "PGMError",
    "SystemId",
    "bitrate_report",
    "decode_image",
    "encode_image",
    "gen_ar1",
    "i2i_dct4_2d_forward",
    "i2i_dct4_2d_inverse",
    "i2i_dct4_forward",
    "i2i_dct4_inverse",
    "read_pgm",
    "write_pgm",
]
