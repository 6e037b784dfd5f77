from __future__ import annotations

from typing import Union

import numpy as np
from scipy.ndimage import gaussian_filter

from lripct.constants import SSIM_K1, SSIM_K2, SSIM_SIGMA, SSIM_WINDOW
from lripct.geometry import Image
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

ImageLike = Union[Image, np.ndarray]


def _pair(a: ImageLike, b: ImageLike) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(a.values if isinstance(a, Image) else a, dtype=np.float64)
    y = np.asarray(b.values if isinstance(b, Image) else b, dtype=np.float64)
    if x.shape != y.shape:
        raise InvalidArgumentError(f"Images of shape {x.shape} and {y.shape} cannot be compared.")

    return x, y


def mse(a: ImageLike, b: ImageLike) -> float:
    """Mean squared difference."""
    x, y = _pair(a, b)
    return float(np.mean((x - y) ** 2))


def rmse(a: ImageLike, b: ImageLike) -> float:
    """Root of the mean squared difference."""
    return float(np.sqrt(mse(a, b)))


def psnr(a: ImageLike, ref: ImageLike, max_val: float = 1.0) -> float:
    """Peak signal-to-noise ratio ``20 log10(max_val / rmse)`` in dB. Identical images give ``inf``."""
    if max_val <= 0:
        raise InvalidArgumentError(f"`max_val` must be positive, got {max_val}.")

    error = rmse(a, ref)
    if error == 0.0:
        return float("inf")

    return float(20.0 * np.log10(max_val / error))


def ssim_map(a: ImageLike, b: ImageLike, data_range: float = 1.0) -> np.ndarray:
    """Local structural similarity over every full 11 x 11 Gaussian window (sigma 1.5).

    Returns
    -------
    values : np.ndarray [n_rows - 10, n_cols - 10]
        One value per window position that lies completely inside the image.
    """
    x, y = _pair(a, b)
    if min(x.shape) < SSIM_WINDOW:
        raise InvalidArgumentError(f"SSIM needs both sides >= {SSIM_WINDOW}, got shape {x.shape}.")

    radius = SSIM_WINDOW // 2
    truncate = radius / SSIM_SIGMA

    def window_mean(z: np.ndarray) -> np.ndarray:
        return gaussian_filter(z, sigma=SSIM_SIGMA, truncate=truncate, mode="constant")[
            radius:-radius, radius:-radius
        ]

    c1 = (SSIM_K1 * data_range) ** 2
    c2 = (SSIM_K2 * data_range) ** 2

    mu_x = window_mean(x)
    mu_y = window_mean(y)
    var_x = window_mean(x * x) - mu_x**2
    var_y = window_mean(y * y) - mu_y**2
    cov = window_mean(x * y) - mu_x * mu_y

    return ((2 * mu_x * mu_y + c1) * (2 * cov + c2)) / ((mu_x**2 + mu_y**2 + c1) * (var_x + var_y + c2))


def ssim(a: ImageLike, b: ImageLike, data_range: float = 1.0) -> float:
    """Mean structural similarity with K1 = 0.01, K2 = 0.03 and dynamic range ``data_range``."""
    return float(np.mean(ssim_map(a, b, data_range)))


def joint_score(a: ImageLike, ref: ImageLike, mu: float = 1.0) -> float:
    """``MSE + mu * (1 - SSIM)``; lower is better."""
    if mu == 0:
        return mse(a, ref)

    return mse(a, ref) + mu * (1.0 - ssim(a, ref))


def residual(img: ImageLike, ref: ImageLike) -> Image:
    """Absolute difference image ``|img - ref|``."""
    x, y = _pair(img, ref)
    return Image(np.abs(x - y))
