from __future__ import annotations

import numpy as np

from lripct.geometry import ScanGeometry

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

# Rays of at most this many views are traced in one vectorized block
VIEWS_PER_BLOCK = 16


def trace_rays(
    sources: np.ndarray,
    targets: np.ndarray,
    n: int,
    pixel_size: float,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Exact intersection lengths of straight rays with an ``n`` x ``n`` pixel grid centered at the origin.

    Siddon's method: the parametric positions where a ray crosses the vertical and horizontal grid lines are merged
    and sorted; consecutive positions bound the segment inside one pixel, whose index follows from the segment
    midpoint.

    Parameters
    ----------
    sources : np.ndarray [R, 2]
        Ray start points.
    targets : np.ndarray [R, 2]
        Ray end points.
    n : int
        Grid side in pixels. Row 0 is the top row (largest y), column 0 the leftmost column.
    pixel_size : float

    Returns
    -------
    ray_index : np.ndarray [K]
        Index of the ray (0..R-1) of every nonzero intersection.
    pixel_index : np.ndarray [K]
        Row-major pixel index.
    length : np.ndarray [K]
        Intersection length, in the units of ``pixel_size``.
    """
    extent = n * pixel_size / 2.0
    planes = -extent + np.arange(n + 1) * pixel_size

    delta = targets - sources
    ray_length = np.hypot(delta[:, 0], delta[:, 1])

    alpha_lo = np.zeros(len(sources))
    alpha_hi = np.ones(len(sources))
    crossings = []
    for axis in (0, 1):
        d = delta[:, axis][:, None]
        s = sources[:, axis][:, None]
        parallel = np.abs(d[:, 0]) < 1e-14 * ray_length

        with np.errstate(divide="ignore", invalid="ignore"):
            alpha = (planes[None, :] - s) / np.where(parallel[:, None], 1.0, d)

        # Rays parallel to this axis never cross its planes; they either stay inside the slab or miss the grid
        inside = (s[:, 0] > -extent) & (s[:, 0] < extent)
        first = np.where(parallel, np.where(inside, -np.inf, np.inf), np.minimum(alpha[:, 0], alpha[:, -1]))
        last = np.where(parallel, np.where(inside, np.inf, -np.inf), np.maximum(alpha[:, 0], alpha[:, -1]))
        alpha_lo = np.maximum(alpha_lo, first)
        alpha_hi = np.minimum(alpha_hi, last)

        alpha[parallel] = 0.0
        crossings.append(alpha)

    missing = ~(alpha_hi > alpha_lo)
    alpha_lo = np.where(missing, 0.0, alpha_lo)
    alpha_hi = np.where(missing, 0.0, alpha_hi)
    merged = np.concatenate([alpha_lo[:, None], crossings[0], crossings[1], alpha_hi[:, None]], axis=1)
    merged = np.clip(merged, alpha_lo[:, None], alpha_hi[:, None])
    merged.sort(axis=1)

    segment = np.diff(merged, axis=1) * ray_length[:, None]
    middle = 0.5 * (merged[:, 1:] + merged[:, :-1])
    x = sources[:, 0][:, None] + middle * delta[:, 0][:, None]
    y = sources[:, 1][:, None] + middle * delta[:, 1][:, None]
    col = np.floor((x + extent) / pixel_size).astype(np.int64)
    row = np.floor((extent - y) / pixel_size).astype(np.int64)

    keep = (segment > 1e-12 * pixel_size) & (col >= 0) & (col < n) & (row >= 0) & (row < n)
    ray_index = np.broadcast_to(np.arange(len(sources))[:, None], segment.shape)[keep]

    return ray_index, (row * n + col)[keep], segment[keep]


def trace_geometry(geom: ScanGeometry) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Traces the bin-center ray of every (view, bin) pair of ``geom``.

    Views are traced in blocks; every block writes only its own rows, so the result does not depend on the block
    size.

    Returns
    -------
    rows : np.ndarray [K]
        Row of the system matrix, ``view * n_bins + bin``.
    cols : np.ndarray [K]
        Row-major pixel index.
    values : np.ndarray [K]
        Intersection lengths.
    """
    sources, detectors = geom.ray_endpoints()
    rows, cols, values = [], [], []
    for start in range(0, geom.n_views, VIEWS_PER_BLOCK):
        stop = min(start + VIEWS_PER_BLOCK, geom.n_views)
        ray, pixel, length = trace_rays(
            sources[start:stop].reshape(-1, 2),
            detectors[start:stop].reshape(-1, 2),
            geom.n,
            geom.pixel_size,
        )
        rows.append(ray + start * geom.n_bins)
        cols.append(pixel)
        values.append(length)

    return np.concatenate(rows), np.concatenate(cols), np.concatenate(values)
