from __future__ import annotations

from functools import lru_cache

import numpy as np

from lripct.geometry import Image, ScanGeometry, Sinogram
from lripct.operators.system_matrix import projection_matrix
from lripct.utils.exceptions import InvalidArgumentError
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


def _check_image(img: Image, geom: ScanGeometry) -> None:
    if img.shape != (geom.n, geom.n):
        raise InvalidArgumentError(f"Image of shape {img.shape} does not match the {geom.n} x {geom.n} grid.")


def _check_sinogram(sino: Sinogram, geom: ScanGeometry) -> None:
    if sino.shape != (geom.n_views, geom.n_bins):
        raise InvalidArgumentError(
            f"Sinogram of shape {sino.shape} does not match {geom.n_views} views x {geom.n_bins} bins."
        )


def project(values: np.ndarray, geom: ScanGeometry) -> np.ndarray:
    """``A`` applied to a raw ``n`` x ``n`` array, returning a raw ``n_views`` x ``n_bins`` array."""
    return (projection_matrix(geom) @ values.reshape(-1)).reshape(geom.n_views, geom.n_bins)


def backproject(values: np.ndarray, geom: ScanGeometry) -> np.ndarray:
    """``A*`` applied to a raw ``n_views`` x ``n_bins`` array, returning a raw ``n`` x ``n`` array."""
    return (projection_matrix(geom).T @ values.reshape(-1)).reshape(geom.n, geom.n)


def forward_project(img: Image, geom: ScanGeometry) -> Sinogram:
    """Exact length-weighted line integrals of ``img`` along every bin-center ray of ``geom``.

    Parameters
    ----------
    img : Image
        Must be ``geom.n`` x ``geom.n``.
    geom : ScanGeometry

    Returns
    -------
    sino : Sinogram
    """
    _check_image(img, geom)
    return Sinogram(project(img.values, geom))


def back_project(sino: Sinogram, geom: ScanGeometry) -> Image:
    """Adjoint of ``forward_project``: ``<A u, p> = <u, A* p>``."""
    _check_sinogram(sino, geom)
    return Image(backproject(sino.values, geom))


@lru_cache(maxsize=16)
def operator_norm(geom: ScanGeometry, n_iter: int = 50, seed: int = 0) -> float:
    """Power-iteration estimate of the spectral norm of ``A``.

    Parameters
    ----------
    geom : ScanGeometry
    n_iter : int, defaults to 50
        Number of ``A* A`` applications.
    seed : int, defaults to 0
        Seed of the random start vector.

    Returns
    -------
    norm : float
    """
    matrix = projection_matrix(geom)
    rng = np.random.Generator(np.random.Philox(seed))
    x = rng.random(geom.n_pixels)
    x /= np.linalg.norm(x)

    norm = 0.0
    for _ in range(n_iter):
        y = matrix.T @ (matrix @ x)
        norm_sq = float(np.linalg.norm(y))
        if norm_sq == 0.0:
            return 0.0

        x = y / norm_sq
        norm = np.sqrt(norm_sq)

    logger.debug(f"Operator norm estimate after {n_iter} iterations: {norm:.6g}.")

    return float(norm)
