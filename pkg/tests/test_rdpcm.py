import numpy as np
import pytest

from i2icodec.rdpcm import RdpcmDirection, rdpcm_forward, rdpcm_inverse

H, V = RdpcmDirection.HORIZONTAL, RdpcmDirection.VERTICAL


def test_horizontal_row_example():
    block = np.tile([5, 7, 6, 6], (4, 1))
    out = rdpcm_forward(block, H)
    assert np.array_equal(out, np.tile([5, 2, -1, 0], (4, 1)))
    assert np.array_equal(rdpcm_inverse(out, H), block)


@pytest.mark.parametrize("direction", [H, V])
def test_zero_block(direction):
    zero = np.zeros((4, 4), dtype=np.int64)
    assert np.array_equal(rdpcm_forward(zero, direction), zero)
    assert np.array_equal(rdpcm_inverse(zero, direction), zero)


def test_constant_block_horizontal():
    out = rdpcm_forward(np.full((4, 4), 9), H)
    expected = np.zeros((4, 4), dtype=np.int64)
    expected[:, 0] = 9
    assert np.array_equal(out, expected)


def test_vertical_is_transposed_horizontal():
    blocks = np.random.default_rng(0).integers(-255, 256, size=(1000, 4, 4))
    vert = rdpcm_forward(blocks, V)
    hor_t = np.swapaxes(rdpcm_forward(np.swapaxes(blocks, -1, -2), H), -1, -2)
    assert np.array_equal(vert, hor_t)


@pytest.mark.parametrize("direction", [H, V])
def test_round_trip_and_range(direction):
    blocks = np.random.default_rng(1).integers(-255, 256, size=(10_000, 4, 4))
    out = rdpcm_forward(blocks, direction)
    assert np.abs(out).max() <= 510
    assert np.array_equal(rdpcm_inverse(out, direction), blocks)


def test_round_trip_large_integers():
    blocks = np.random.default_rng(2).integers(-(1 << 40), 1 << 40, size=(100, 4, 4))
    for d in (H, V):
        assert np.array_equal(rdpcm_inverse(rdpcm_forward(blocks, d), d), blocks)
