from __future__ import annotations

from typing import Any

from dataclasses import dataclass

import numpy as np

from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def _as_raster(values: Any, kind: str) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
        raise InvalidArgumentError(f"{kind} values must be a non-empty 2d array, got shape {array.shape}.")

    if not np.all(np.isfinite(array)):
        raise InvalidArgumentError(f"{kind} values must be finite.")

    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Image:
    """Pixel raster on the reconstruction grid, row 0 at the top (largest y).

    Parameters
    ----------
    values : np.ndarray [n_rows, n_cols]
        Attenuation per unit length. Stored as a read-only float64 copy.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_raster(self.values, "Image"))

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_cols(self) -> int:
        return self.values.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape  # type: ignore

    @staticmethod
    def zeros(n_rows: int, n_cols: int | None = None) -> Image:
        """Returns an all-zero image; square if ``n_cols`` is omitted."""
        return Image(np.zeros((n_rows, n_rows if n_cols is None else n_cols)))

    def flatten(self) -> np.ndarray:
        """Row-major pixel vector of length ``n_rows * n_cols``."""
        return self.values.reshape(-1)


@dataclass(frozen=True, eq=False)
class Sinogram:
    """Projection data indexed by (view, detector bin).

    Parameters
    ----------
    values : np.ndarray [n_views, n_bins]
        Line integrals. Stored as a read-only float64 copy.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_raster(self.values, "Sinogram"))

    @property
    def n_views(self) -> int:
        return self.values.shape[0]

    @property
    def n_bins(self) -> int:
        return self.values.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape  # type: ignore

    @staticmethod
    def zeros(n_views: int, n_bins: int) -> Sinogram:
        return Sinogram(np.zeros((n_views, n_bins)))

    def flatten(self) -> np.ndarray:
        """Row-major (view-major) vector of length ``n_views * n_bins``."""
        return self.values.reshape(-1)
