"""Seeded separable AR(1) test planes."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Ar1Spec:
    """Parameters of a separable AR(1) field.

    ``sigma`` is the innovation standard deviation; the stationary sample
    standard deviation is ``sigma / (1 - rho**2)``.
    """

    width: int
    height: int
    rho: float
    sigma: float
    seed: int = 0


def gen_ar1_field(spec: Ar1Spec) -> np.ndarray:
    """Zero-mean float field satisfying
    ``x[r, c] = rho*x[r, c-1] + rho*x[r-1, c] - rho**2*x[r-1, c-1] + sigma*n``.

    Built as a 1D AR(1) down the columns of a 1D AR(1) across the rows, both
    started from their stationary distribution so there is no edge transient.
    Uses numpy's PCG64 generator seeded with ``spec.seed``.
    """
    if not 0 <= spec.rho < 1:
        raise ValueError(f"rho must lie in [0, 1), got {spec.rho}")
    if spec.width < 1 or spec.height < 1:
        raise ValueError("width and height must be positive")
    rho = spec.rho
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    noise = spec.sigma * rng.standard_normal((spec.height, spec.width))
    stationary = 1.0 / math.sqrt(1.0 - rho * rho)

    rows = np.empty_like(noise)
    rows[:, 0] = noise[:, 0] * stationary
    for c in range(1, spec.width):
        rows[:, c] = rho * rows[:, c - 1] + noise[:, c]

    field = np.empty_like(rows)
    field[0] = rows[0] * stationary
    for r in range(1, spec.height):
        field[r] = rho * field[r - 1] + rows[r]
    return field


def gen_ar1(spec: Ar1Spec) -> np.ndarray:
    """8-bit plane: the AR(1) field offset by 128, rounded and clipped."""
    field = gen_ar1_field(spec)
    return np.clip(np.rint(field + 128.0), 0, 255).astype(np.uint8)


def lag1_autocorrelation(plane: np.ndarray, axis: int = 1) -> float:
    x = np.asarray(plane, dtype=float)
    x = x - x.mean()
    a = np.moveaxis(x, axis, -1)
    denom = float((x * x).sum())
    if denom == 0:
        return 0.0
    return float((a[..., 1:] * a[..., :-1]).sum() / denom)
