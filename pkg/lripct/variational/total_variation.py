from __future__ import annotations

import numpy as np

from lripct.geometry import Image
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

# Step of the dual projected gradient; ||div||^2 <= 8
TV_DUAL_STEP = 1.0 / 8.0


def grad(u: np.ndarray) -> np.ndarray:
    """Forward differences with a zero gradient across the last row and column.

    Returns
    -------
    g : np.ndarray [2, n_rows, n_cols]
        Vertical (row) and horizontal (column) differences.
    """
    g = np.zeros((2,) + u.shape)
    g[0, :-1, :] = u[1:, :] - u[:-1, :]
    g[1, :, :-1] = u[:, 1:] - u[:, :-1]
    return g


def div(p: np.ndarray) -> np.ndarray:
    """Discrete divergence, the negative adjoint of ``grad``."""
    d = np.zeros(p.shape[1:])
    d[:-1, :] += p[0, :-1, :]
    d[1:, :] -= p[0, :-1, :]
    d[:, :-1] += p[1, :, :-1]
    d[:, 1:] -= p[1, :, :-1]
    return d


def tv(u: np.ndarray) -> float:
    """Isotropic total variation ``sum sqrt(dx^2 + dy^2)`` in pixel units."""
    g = grad(u)
    return float(np.sum(np.sqrt(g[0] ** 2 + g[1] ** 2)))


def project_dual_ball(p: np.ndarray, radius: float = 1.0) -> np.ndarray:
    """Pointwise projection of a vector field onto ``|p| <= radius``."""
    magnitude = np.sqrt(p[0] ** 2 + p[1] ** 2)
    return p / np.maximum(1.0, magnitude / radius)[None, :, :]


def tv_prox_values(v: np.ndarray, weight: float, inner_iters: int = 20) -> np.ndarray:
    """Raw-array form of ``tv_prox``."""
    if weight < 0:
        raise InvalidArgumentError(f"The TV weight must be nonnegative, got {weight}.")

    v = np.asarray(v, dtype=np.float64)
    if weight == 0:
        return v.copy()

    p = np.zeros((2,) + v.shape)
    for _ in range(inner_iters):
        p = project_dual_ball(p + TV_DUAL_STEP * grad(div(p) - v / weight))

    return v - weight * div(p)


def tv_prox(v: Image, weight: float, inner_iters: int = 20) -> Image:
    """Approximates ``argmin_x 1/2 ||x - v||^2 + weight * TV(x)``.

    Runs ``inner_iters`` projected-gradient steps on the dual problem, starting from a zero dual field.

    Parameters
    ----------
    v : Image
    weight : float
        Nonnegative TV weight. 0 returns ``v`` unchanged.
    inner_iters : int, defaults to 20

    Returns
    -------
    x : Image
    """
    if not isinstance(v, Image):
        raise InvalidArgumentError(f"Expected an Image, got {type(v).__name__}.")

    return Image(tv_prox_values(v.values, weight, inner_iters))
