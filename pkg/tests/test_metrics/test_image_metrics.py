from __future__ import annotations

import numpy as np
import pytest
from scipy.ndimage import uniform_filter

from lripct.geometry import Image
from lripct.metrics import joint_score, mse, psnr, residual, rmse, ssim, ssim_map
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def checkerboard(n: int = 16) -> np.ndarray:
    return (np.indices((n, n)).sum(axis=0) % 2).astype(float)


def reference_ssim(x: np.ndarray, y: np.ndarray, data_range: float = 1.0) -> float:
    """Structural similarity written out window by window."""
    taps = np.exp(-(np.arange(-5, 6) ** 2) / (2 * 1.5**2))
    w = np.outer(taps, taps)
    w /= w.sum()
    c1, c2 = (0.01 * data_range) ** 2, (0.03 * data_range) ** 2

    values = []
    for i in range(x.shape[0] - 10):
        for j in range(x.shape[1] - 10):
            px, py = x[i : i + 11, j : j + 11], y[i : i + 11, j : j + 11]
            mx, my = np.sum(w * px), np.sum(w * py)
            vx = np.sum(w * px * px) - mx**2
            vy = np.sum(w * py * py) - my**2
            cov = np.sum(w * px * py) - mx * my
            values.append(((2 * mx * my + c1) * (2 * cov + c2)) / ((mx**2 + my**2 + c1) * (vx + vy + c2)))

    return float(np.mean(values))


def test_examples():
    zeros, ones = np.zeros((12, 12)), np.ones((12, 12))

    assert mse(zeros, ones) == 1
    assert rmse(zeros, ones) == 1
    assert psnr(zeros, ones) == pytest.approx(0.0)
    assert psnr(zeros, np.full((12, 12), 0.1)) == pytest.approx(20.0)
    assert psnr(zeros, np.full((12, 12), 0.1), max_val=10.0) == pytest.approx(60.0)


def test_identical_images():
    img = Image(np.random.default_rng(0).random((16, 16)))

    assert psnr(img, img) == float("inf")
    assert rmse(img, img) == 0
    assert ssim(img, img) == pytest.approx(1.0)
    assert joint_score(img, img) == pytest.approx(0.0)


def test_ssim_matches_definition():
    x = checkerboard()
    y = uniform_filter(x, size=3, mode="nearest")

    assert ssim(x, y) == pytest.approx(reference_ssim(x, y), abs=1e-10)
    assert ssim_map(x, y).shape == (6, 6)


def test_ssim_is_symmetric():
    rng = np.random.default_rng(1)
    x, y = rng.random((20, 24)), rng.random((20, 24))

    assert ssim(x, y) == pytest.approx(ssim(y, x), abs=1e-14)
    assert -1 <= ssim(x, y) <= 1


def test_ssim_detects_structure():
    x = checkerboard()
    assert ssim(x, 1 - x) < 0
    assert ssim(x, uniform_filter(x, size=3, mode="nearest")) < 1


def test_joint_score():
    x = checkerboard()
    y = uniform_filter(x, size=3, mode="nearest")

    assert joint_score(x, y) == pytest.approx(mse(x, y) + 1 - ssim(x, y))
    assert joint_score(x, y, mu=0) == mse(x, y)
    assert joint_score(x, y, mu=2) == pytest.approx(mse(x, y) + 2 * (1 - ssim(x, y)))


def test_residual():
    out = residual(np.zeros((2, 2)), np.array([[1.0, -2.0], [0.5, 0.0]]))
    assert isinstance(out, Image)
    assert np.array_equal(out.values, [[1.0, 2.0], [0.5, 0.0]])


def test_invalid_inputs():
    with pytest.raises(InvalidArgumentError):
        mse(np.zeros((4, 4)), np.zeros((4, 5)))

    with pytest.raises(InvalidArgumentError):
        ssim(np.zeros((10, 16)), np.zeros((10, 16)))

    with pytest.raises(InvalidArgumentError):
        psnr(np.zeros((4, 4)), np.ones((4, 4)), max_val=0)
