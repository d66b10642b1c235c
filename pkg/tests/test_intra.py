import numpy as np
import pytest

from i2icodec.intra import (
    IntraMode,
    ReferenceSamples,
    predict,
    prepare_all_references,
    prepare_references,
    reconstruct,
    residual,
)


def refs_from(top, left, corner, top_ok=True, left_ok=True):
    return ReferenceSamples(
        top=np.asarray(top, dtype=np.int64),
        left=np.asarray(left, dtype=np.int64),
        corner=np.int64(corner),
        top_available=np.bool_(top_ok),
        left_available=np.bool_(left_ok),
        above_right_available=np.bool_(top_ok),
    )


def random_refs(rng, n):
    return ReferenceSamples(
        top=rng.integers(0, 256, size=(n, 8)),
        left=rng.integers(0, 256, size=(n, 4)),
        corner=rng.integers(0, 256, size=n),
        top_available=rng.random(n) < 0.8,
        left_available=rng.random(n) < 0.8,
        above_right_available=np.ones(n, dtype=bool),
    )


def test_top_left_block_is_all_mid_grey():
    plane = np.random.default_rng(0).integers(0, 256, size=(8, 8))
    refs = prepare_references(plane, 0, 0)
    assert np.all(refs.top == 128) and np.all(refs.left == 128) and refs.corner == 128


def test_top_only_block_fills_left_from_top():
    plane = np.zeros((8, 12), dtype=np.int64)
    plane[3, 0:8] = np.arange(100, 108)
    refs = prepare_references(plane, 4, 0)
    assert list(refs.top) == list(range(100, 108))
    assert list(refs.left) == [100] * 4
    assert refs.corner == 100


def test_left_only_block_fills_top_from_left():
    plane = np.zeros((4, 8), dtype=np.int64)
    plane[:, 3] = [50, 60, 70, 80]
    refs = prepare_references(plane, 0, 4)
    assert list(refs.top) == [50] * 8
    assert list(refs.left) == [50, 60, 70, 80]
    assert refs.corner == 50


def test_interior_block_copies_neighbours():
    plane = np.arange(16 * 16).reshape(16, 16) % 251
    refs = prepare_references(plane, 4, 4)
    assert list(refs.top) == list(plane[3, 4:12])
    assert list(refs.left) == list(plane[4:8, 3])
    assert refs.corner == plane[3, 3]


def test_missing_above_right_repeats_last_top_sample():
    plane = np.arange(8 * 8).reshape(8, 8)
    refs = prepare_references(plane, 4, 4)
    assert list(refs.top) == list(plane[3, 4:8]) + [plane[3, 7]] * 4


@pytest.mark.parametrize("shape", [(4, 4), (8, 12), (16, 8), (20, 28)])
def test_vectorized_references_match_per_block(shape):
    plane = np.random.default_rng(sum(shape)).integers(0, 256, size=shape)
    batch = prepare_all_references(plane)
    for by in range(shape[0] // 4):
        for bx in range(shape[1] // 4):
            one = prepare_references(plane, by * 4, bx * 4)
            assert np.array_equal(batch.top[by, bx], one.top)
            assert np.array_equal(batch.left[by, bx], one.left)
            assert batch.corner[by, bx] == one.corner
            assert batch.top_available[by, bx] == one.top_available
            assert batch.left_available[by, bx] == one.left_available
            assert batch.above_right_available[by, bx] == one.above_right_available


@pytest.mark.parametrize("mode", list(IntraMode))
def test_constant_references_give_constant_prediction(mode):
    assert np.all(predict(ReferenceSamples.constant(100), mode) == 100)


def test_vertical_and_horizontal_examples():
    refs = refs_from([10, 20, 30, 40, 0, 0, 0, 0], [1, 2, 3, 4], 0)
    assert np.array_equal(predict(refs, IntraMode.VERTICAL), np.tile([10, 20, 30, 40], (4, 1)))
    assert np.array_equal(predict(refs, IntraMode.HORIZONTAL), np.tile([[1], [2], [3], [4]], (1, 4)))


def test_dc_examples():
    refs = refs_from([10] * 8, [20] * 4, 0)
    assert np.all(predict(refs, IntraMode.DC) == 15)
    assert np.all(predict(refs_from([10, 11, 12, 13] + [0] * 4, [90] * 4, 0, left_ok=False), IntraMode.DC) == 12)
    assert np.all(predict(refs_from([0] * 8, [1, 2, 3, 5], 0, top_ok=False), IntraMode.DC) == 3)
    assert np.all(predict(refs_from([0] * 8, [0] * 4, 0, False, False), IntraMode.DC) == 128)


def test_planar_diag_formulas_by_hand():
    rng = np.random.default_rng(3)
    T, L, C = rng.integers(0, 256, 8), rng.integers(0, 256, 4), int(rng.integers(0, 256))
    refs = refs_from(T, L, C)
    E = {-1: C, **{-2 - i: int(L[i]) for i in range(4)}, **{j: int(T[j]) for j in range(8)}}
    planar = predict(refs, IntraMode.PLANAR)
    ddl = predict(refs, IntraMode.DIAG_DOWN_LEFT)
    ddr = predict(refs, IntraMode.DIAG_DOWN_RIGHT)
    for r in range(4):
        for c in range(4):
            assert planar[r, c] == ((3 - c) * L[r] + (c + 1) * T[4] + (3 - r) * T[c] + (r + 1) * L[3] + 4) // 8
            assert ddl[r, c] == (T[min(r + c, 6)] + 2 * T[min(r + c + 1, 7)] + T[min(r + c + 2, 7)] + 2) // 4
            assert ddr[r, c] == (E[c - r - 1] + 2 * E[c - r] + E[c - r + 1] + 2) // 4


@pytest.mark.parametrize("mode", list(IntraMode))
def test_prediction_stays_in_8bit_range(mode):
    rng = np.random.default_rng(int(mode))
    pred = predict(random_refs(rng, 20_000), mode)
    assert pred.shape == (20_000, 4, 4)
    assert pred.min() >= 0 and pred.max() <= 255
    extremes = ReferenceSamples(
        top=np.array([[0] * 8, [255] * 8]),
        left=np.array([[255] * 4, [0] * 4]),
        corner=np.array([0, 255]),
        top_available=np.array([True, True]),
        left_available=np.array([True, True]),
        above_right_available=np.array([True, True]),
    )
    pred = predict(extremes, mode)
    assert pred.min() >= 0 and pred.max() <= 255


@pytest.mark.parametrize("mode", list(IntraMode))
def test_batched_prediction_matches_single(mode):
    rng = np.random.default_rng(10 + int(mode))
    batch = random_refs(rng, 50)
    out = predict(batch, mode)
    for i in range(50):
        one = ReferenceSamples(
            batch.top[i], batch.left[i], batch.corner[i],
            batch.top_available[i], batch.left_available[i], batch.above_right_available[i],
        )
        assert np.array_equal(predict(one, mode), out[i])


def test_invalid_mode_rejected():
    with pytest.raises(ValueError):
        predict(ReferenceSamples.constant(), 6)


def test_horizontal_of_transpose_is_transposed_vertical():
    plane = np.random.default_rng(4).integers(0, 256, size=(16, 16))
    for y in range(0, 16, 4):
        for x in range(0, 16, 4):
            v = predict(prepare_references(plane, y, x), IntraMode.VERTICAL)
            h = predict(prepare_references(plane.T, x, y), IntraMode.HORIZONTAL)
            assert np.array_equal(h, v.T)


def test_prediction_is_deterministic():
    plane = np.random.default_rng(5).integers(0, 256, size=(12, 12))
    a = [predict(prepare_references(plane, 4, 4), m) for m in IntraMode]
    b = [predict(prepare_references(plane.copy(), 4, 4), m) for m in IntraMode]
    assert all(np.array_equal(x, y) for x, y in zip(a, b))


def test_residual_reconstruct():
    rng = np.random.default_rng(6)
    x = rng.integers(0, 256, size=(1000, 4, 4))
    pred = rng.integers(0, 256, size=(1000, 4, 4))
    assert np.all(residual(x, x) == 0)
    assert np.array_equal(reconstruct(pred, np.zeros_like(pred)), pred)
    res = residual(x, pred)
    assert res.min() >= -255 and res.max() <= 255
    assert np.array_equal(reconstruct(pred, res), x)
