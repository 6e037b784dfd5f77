from __future__ import annotations

from typing import Iterable

import numpy as np

from lripct.geometry import Image
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

# Ten-ellipse head phantom with high-contrast intensities:
# value, semi-axis a (x), semi-axis b (y), center x, center y, rotation (degrees)
SHEPP_LOGAN_ELLIPSES = np.array(
    [
        [1.0, 0.69, 0.92, 0.0, 0.0, 0.0],
        [-0.8, 0.6624, 0.874, 0.0, -0.0184, 0.0],
        [-0.2, 0.11, 0.31, 0.22, 0.0, -18.0],
        [-0.2, 0.16, 0.41, -0.22, 0.0, 18.0],
        [0.1, 0.21, 0.25, 0.0, 0.35, 0.0],
        [0.1, 0.046, 0.046, 0.0, 0.1, 0.0],
        [0.1, 0.046, 0.046, 0.0, -0.1, 0.0],
        [0.1, 0.046, 0.023, -0.08, -0.605, 0.0],
        [0.1, 0.023, 0.023, 0.0, -0.606, 0.0],
        [0.1, 0.023, 0.046, 0.06, -0.605, 0.0],
    ]
)


def pixel_centers(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates of the pixel centers of an ``n`` x ``n`` grid on [-1, 1]^2, row 0 at the top.

    Returns
    -------
    x : np.ndarray [1, n]
    y : np.ndarray [n, 1]
    """
    offsets = (np.arange(n) - (n - 1) / 2.0) * (2.0 / n)
    return offsets[None, :], -offsets[:, None]


def ellipse_mask(n: int, a: float, b: float, x0: float, y0: float, phi_deg: float) -> np.ndarray:
    """Pixels of an ``n`` x ``n`` grid whose center lies inside the rotated ellipse."""
    x, y = pixel_centers(n)
    phi = np.deg2rad(phi_deg)
    dx, dy = x - x0, y - y0
    xr = dx * np.cos(phi) + dy * np.sin(phi)
    yr = -dx * np.sin(phi) + dy * np.cos(phi)
    return (xr / a) ** 2 + (yr / b) ** 2 <= 1.0


def shepp_logan(n: int) -> Image:
    """Shepp-Logan head phantom sampled at the pixel centers of an ``n`` x ``n`` grid on [-1, 1]^2.

    Values are clipped to [0, 1].
    """
    if n < 16:
        raise InvalidArgumentError(f"The Shepp-Logan phantom needs n >= 16, got {n}.")

    values = np.zeros((n, n))
    for value, a, b, x0, y0, phi in SHEPP_LOGAN_ELLIPSES:
        values[ellipse_mask(n, a, b, x0, y0, phi)] += value

    return Image(np.clip(values, 0.0, 1.0))


def disk_phantom(n: int, disks: Iterable[tuple[float, float, float, float]]) -> Image:
    """Sum of uniform disks ``(cx, cy, radius, value)`` sampled at the pixel centers of an ``n`` x ``n`` grid on
    [-1, 1]^2.
    """
    if n < 2:
        raise InvalidArgumentError(f"The image side must be at least 2, got {n}.")

    x, y = pixel_centers(n)
    values = np.zeros((n, n))
    for cx, cy, radius, value in disks:
        values[(x - cx) ** 2 + (y - cy) ** 2 <= radius**2] += value

    return Image(values)
