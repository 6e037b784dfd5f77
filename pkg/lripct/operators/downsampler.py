from __future__ import annotations

from typing import Any

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from lripct.geometry import Image
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


@dataclass(frozen=True)
class DownSampler:
    """Equidistant selection of every ``factor``-th pixel per axis, anchored at index 0.

    As a matrix ``D`` has exactly one 1 per row and at most one 1 per column, so ``D D^T = I`` and ``D^T D`` is
    diagonal with entries in {0, 1}.

    Parameters
    ----------
    factor : int
        Down-sampling factor, a positive power of two.
    full_n : int
        Side of the fine grid, divisible by ``factor``.
    """

    factor: int
    full_n: int

    def __post_init__(self) -> None:
        if int(self.factor) != self.factor or self.factor < 1 or (int(self.factor) & (int(self.factor) - 1)) != 0:
            raise InvalidArgumentError(f"The down-sampling factor must be a positive power of two, got {self.factor}.")

        if int(self.full_n) != self.full_n or self.full_n < 1:
            raise InvalidArgumentError(f"The image side must be a positive integer, got {self.full_n}.")

        if self.full_n % self.factor != 0:
            raise InvalidArgumentError(
                f"Image side {self.full_n} is not divisible by the down-sampling factor {self.factor}."
            )

        object.__setattr__(self, "factor", int(self.factor))
        object.__setattr__(self, "full_n", int(self.full_n))

    @property
    def coarse_n(self) -> int:
        return self.full_n // self.factor

    @property
    def meta(self) -> dict[str, Any]:
        return {"factor": self.factor, "full_n": self.full_n}

    def selected(self) -> np.ndarray:
        """Row-major fine-grid indices picked by ``D``, in coarse row-major order."""
        index = np.arange(0, self.full_n, self.factor)
        return (index[:, None] * self.full_n + index[None, :]).reshape(-1)

    def mask(self) -> np.ndarray:
        """Boolean ``full_n`` x ``full_n`` array, True where ``D^T D`` has a 1 on the diagonal."""
        mask = np.zeros((self.full_n, self.full_n), dtype=bool)
        mask[:: self.factor, :: self.factor] = True
        return mask

    def matrix(self) -> sp.csr_matrix:
        """``D`` as a sparse (coarse_n^2) x (full_n^2) selection matrix."""
        n_coarse = self.coarse_n**2
        return sp.csr_matrix(
            (np.ones(n_coarse), (np.arange(n_coarse), self.selected())),
            shape=(n_coarse, self.full_n**2),
        )


def downsample(img: Image, d: DownSampler) -> Image:
    """``u_l = D u``: coarse pixel (i, j) is fine pixel (factor * i, factor * j)."""
    if img.n_rows % d.factor != 0 or img.n_cols % d.factor != 0:
        raise InvalidArgumentError(f"Image of shape {img.shape} is not divisible by the factor {d.factor}.")

    if img.shape != (d.full_n, d.full_n):
        raise InvalidArgumentError(f"Image of shape {img.shape} does not match the {d.full_n} x {d.full_n} grid.")

    return Image(img.values[:: d.factor, :: d.factor])


def upsample_adjoint(img_low: Image, d: DownSampler) -> Image:
    """``D^T u_l``: coarse values placed at (factor * i, factor * j), zeros elsewhere."""
    if img_low.shape != (d.coarse_n, d.coarse_n):
        raise InvalidArgumentError(
            f"Image of shape {img_low.shape} does not match the {d.coarse_n} x {d.coarse_n} coarse grid."
        )

    values = np.zeros((d.full_n, d.full_n))
    values[:: d.factor, :: d.factor] = img_low.values

    return Image(values)
