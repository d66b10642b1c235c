"""
Integer-to-integer lifting primitives and the 4-point i2i DCT.

Every lifting step adds a rounded, scaled copy of one sample to another and
is undone by subtracting the identically rounded quantity, so all forward
transforms here are exactly invertible on integers.

The arithmetic only uses ``+``, ``-``, ``*`` by integer constants and ``>>``,
so the same functions accept Python ints and numpy integer arrays (applied
elementwise). The 1D/2D DCT wrappers take arrays whose last axis (or last two
axes) hold the 4 (or 4x4) samples, so whole batches of blocks can be
transformed in one call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

Target = Literal["first", "second"]

#: Internal integer domain bound; larger magnitudes are a caller error.
DOMAIN_LIMIT = 1 << 20


def rnd_shift(z, m: int):
    """Round ``z / 2**m`` half-up: ``floor((z + 2**(m-1)) / 2**m)``.

    ``>>`` is an arithmetic (floor) shift for both Python ints and numpy
    signed integers, so this is sign-correct.
    """
    if m == 0:
        return z
    return (z + (1 << (m - 1))) >> m


@dataclass(frozen=True)
class LiftingFactor:
    """Dyadic rational lifting multiplier ``k / 2**m``."""

    k: int
    m: int = 0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"shift must be non-negative, got m={self.m}")

    @classmethod
    def from_float(cls, value: float, m: int = 8) -> "LiftingFactor":
        """Quantize ``value`` to the nearest multiple of ``2**-m``."""
        return cls(int(round(value * (1 << m))), m)

    @property
    def value(self) -> float:
        return self.k / (1 << self.m)

    def apply(self, v):
        """Rounded product ``rnd(k * v / 2**m)``."""
        return rnd_shift(self.k * v, self.m)


HALF = LiftingFactor(1, 1)


def lift_forward(pair, f: LiftingFactor, target: Target = "first"):
    """Add ``f * other`` (rounded) to the ``target`` element of ``pair``."""
    a, b = pair
    if target == "first":
        return a + f.apply(b), b
    if target == "second":
        return a, b + f.apply(a)
    raise ValueError(f"target must be 'first' or 'second', got {target!r}")


def lift_inverse(pair, f: LiftingFactor, target: Target = "first"):
    """Undo :func:`lift_forward` by subtracting the same rounded addend."""
    a, b = pair
    if target == "first":
        return a - f.apply(b), b
    if target == "second":
        return a, b - f.apply(a)
    raise ValueError(f"target must be 'first' or 'second', got {target!r}")


@dataclass(frozen=True)
class RotationParams:
    """A plane rotation by ``alpha`` and its three-lift factorization.

    The rotation matrix ``[[cos, -sin], [sin, cos]]`` equals
    ``[[1, p], [0, 1]] @ [[1, 0], [u, 1]] @ [[1, p], [0, 1]]`` with
    ``p = (cos(alpha) - 1) / sin(alpha)`` and ``u = sin(alpha)``.
    """

    alpha: float
    frac_bits: int = 8

    def __post_init__(self):
        if abs(math.sin(self.alpha)) < 1e-12:
            raise ValueError("rotation angle must have sin(alpha) != 0")
        if not 0 <= self.frac_bits <= 8:
            raise ValueError("frac_bits must lie in [0, 8]")

    @property
    def p(self) -> float:
        return (math.cos(self.alpha) - 1.0) / math.sin(self.alpha)

    @property
    def u(self) -> float:
        return math.sin(self.alpha)

    def factors(self) -> tuple[LiftingFactor, LiftingFactor]:
        """Quantized ``(p, u)`` used by the integer rotation."""
        return (
            LiftingFactor.from_float(self.p, self.frac_bits),
            LiftingFactor.from_float(self.u, self.frac_bits),
        )

    def lifting_matrices(self) -> list[np.ndarray]:
        """Exact (unquantized) lifting matrices in application order."""
        p, u = self.p, self.u
        upper = np.array([[1.0, p], [0.0, 1.0]])
        lower = np.array([[1.0, 0.0], [u, 1.0]])
        return [upper, lower, upper]

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.alpha), math.sin(self.alpha)
        return np.array([[c, -s], [s, c]])


def rotate3_forward(pair, rp: RotationParams):
    """Integer approximation of rotating ``pair`` by ``rp.alpha``.

    Three lifts p, u, p: the first sample is lifted by p times the second,
    then the second by u times the first, then the first again by p.
    """
    p, u = rp.factors()
    pair = lift_forward(pair, p, "first")
    pair = lift_forward(pair, u, "second")
    return lift_forward(pair, p, "first")


def rotate3_inverse(pair, rp: RotationParams):
    p, u = rp.factors()
    pair = lift_inverse(pair, p, "first")
    pair = lift_inverse(pair, u, "second")
    return lift_inverse(pair, p, "first")


def lb_forward(a, b):
    """Lifting butterfly: returns ``(rounded mean, difference)``.

    ``d = a - b`` and ``s = b + rnd(d / 2)``, so ``s`` is ``(a + b) / 2``
    rounded half-up and the pair never grows beyond one extra bit.
    """
    d = a - b
    s = b + rnd_shift(d, 1)
    return s, d


def lb_inverse(s, d):
    b = s - rnd_shift(d, 1)
    return d + b, b


# Odd-part rotation multipliers (p = u = 1/2).
P_FACTOR = HALF
U_FACTOR = HALF


def _forward4(x0, x1, x2, x3):
    s0, d0 = lb_forward(x0, x3)
    s1, d1 = lb_forward(x1, x2)
    c0, c2 = lb_forward(s0, s1)
    # two-lift rotation of the odd part (d0, d1)
    y1 = d1 - P_FACTOR.apply(d0)
    y0 = d0 + U_FACTOR.apply(y1)
    return c0, y0, c2, y1


def _inverse4(c0, c1, c2, c3):
    d0 = c1 - U_FACTOR.apply(c3)
    d1 = c3 + P_FACTOR.apply(d0)
    s0, s1 = lb_inverse(c0, c2)
    x0, x3 = lb_inverse(s0, d0)
    x1, x2 = lb_inverse(s1, d1)
    return x0, x1, x2, x3


def _apply_last_axis(fn, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    if x.shape[-1:] != (4,):
        raise ValueError(f"expected last axis of length 4, got shape {x.shape}")
    assert np.all(np.abs(x) <= DOMAIN_LIMIT), "input outside integer domain"
    return np.stack(fn(x[..., 0], x[..., 1], x[..., 2], x[..., 3]), axis=-1)


def i2i_dct4_forward(x) -> np.ndarray:
    """4-point i2i DCT along the last axis.

    Output order is ``(DC, X1, X2, X3)``. DC is the rounded mean of the
    inputs; no output scaling is applied.
    """
    return _apply_last_axis(_forward4, x)


def i2i_dct4_inverse(c) -> np.ndarray:
    return _apply_last_axis(_inverse4, c)


def i2i_dct4_2d_forward(block) -> np.ndarray:
    """Rows first, then columns. Accepts ``(..., 4, 4)`` batches."""
    rows = i2i_dct4_forward(block)
    return np.swapaxes(i2i_dct4_forward(np.swapaxes(rows, -1, -2)), -1, -2)


def i2i_dct4_2d_inverse(coeff) -> np.ndarray:
    cols = np.swapaxes(i2i_dct4_inverse(np.swapaxes(coeff, -1, -2)), -1, -2)
    return i2i_dct4_inverse(cols)


def dct4_matrix() -> np.ndarray:
    """Orthonormal 4-point DCT-II basis, one basis vector per row."""
    n = np.arange(4)
    basis = np.cos(np.pi * (2 * n[None, :] + 1) * n[:, None] / 8)
    basis[0] *= math.sqrt(1 / 4)
    basis[1:] *= math.sqrt(2 / 4)
    return basis


def dct4_float_reference(x) -> np.ndarray:
    """Orthonormal DCT-II along the last axis (test oracle only)."""
    return np.asarray(x, dtype=float) @ dct4_matrix().T
