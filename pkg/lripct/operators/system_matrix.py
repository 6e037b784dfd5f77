from __future__ import annotations

from typing import Any

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from lripct.constants import MATRIX_BUDGET
from lripct.geometry import ScanGeometry
from lripct.operators.ray_tracing import trace_geometry
from lripct.utils.exceptions import FormatError, InvalidArgumentError, ResourceLimitError
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class SystemMatrix:
    """Sparse M x N matrix of ray-pixel intersection lengths.

    Parameters
    ----------
    matrix : sp.csr_matrix
        Rows are rays (``view * n_bins + bin``), columns are row-major pixels.
    geometry : ScanGeometry | None, defaults to None
        The geometry the matrix was traced from, if known.
    """

    matrix: sp.csr_matrix
    geometry: ScanGeometry | None = None

    @property
    def n_rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_cols(self) -> int:
        return self.matrix.shape[1]

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    @property
    def meta(self) -> dict[str, Any]:
        return {"n_rows": self.n_rows, "n_cols": self.n_cols, "nnz": self.nnz}

    def apply(self, x: np.ndarray) -> np.ndarray:
        """Matrix-vector product with a flat pixel vector."""
        return self.matrix @ np.asarray(x, dtype=np.float64).reshape(-1)

    def apply_transpose(self, y: np.ndarray) -> np.ndarray:
        """Transposed product with a flat sinogram vector."""
        return self.matrix.T @ np.asarray(y, dtype=np.float64).reshape(-1)

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def triplets(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Returns (row, col, value) of every stored entry in row-major order."""
        coo = self.matrix.tocoo()
        order = np.lexsort((coo.col, coo.row))
        return coo.row[order], coo.col[order], coo.data[order]

    def save(self, path: Path) -> None:
        """Writes the text triplet file: a ``rows cols nnz`` header and one ``row col value`` line per entry."""
        rows, cols, values = self.triplets()
        with open(path, "w") as fh:
            fh.write(f"{self.n_rows} {self.n_cols} {self.nnz}\n")
            for r, c, v in zip(rows, cols, values):
                fh.write(f"{r} {c} {v:.17g}\n")

    @staticmethod
    def load(path: Path) -> SystemMatrix:
        """Reads a text triplet file written by ``save``."""
        with open(path, "r") as fh:
            header = fh.readline().split()
            if len(header) != 3:
                raise FormatError("Triplet header must read `rows cols nnz`", offset=0)

            n_rows, n_cols, nnz = (int(v) for v in header)
            entries = np.loadtxt(fh, ndmin=2) if nnz > 0 else np.zeros((0, 3))

        if len(entries) != nnz:
            raise FormatError(f"Expected {nnz} entries but found {len(entries)}", offset=len(" ".join(header)) + 1)

        matrix = sp.csr_matrix(
            (entries[:, 2], (entries[:, 0].astype(np.int64), entries[:, 1].astype(np.int64))),
            shape=(n_rows, n_cols),
        )
        return SystemMatrix(matrix)


@lru_cache(maxsize=16)
def projection_matrix(geom: ScanGeometry) -> sp.csr_matrix:
    """Traces ``geom`` once and keeps the sparse matrix for later projections."""
    rows, cols, values = trace_geometry(geom)
    matrix = sp.csr_matrix((values, (rows, cols)), shape=(geom.n_rays, geom.n_pixels))
    matrix.sum_duplicates()
    matrix.sort_indices()
    logger.debug(f"Traced {geom.n_rays} rays through {geom.n_pixels} pixels ({matrix.nnz} intersections).")

    return matrix


def build_system_matrix(geom: ScanGeometry, budget: int | None = None) -> SystemMatrix:
    """Explicit system matrix of ``geom``.

    Parameters
    ----------
    geom : ScanGeometry
    budget : int | None, defaults to None
        Maximum M x N (dense-equivalent entry count). Defaults to ``MATRIX_BUDGET``.

    Returns
    -------
    system_matrix : SystemMatrix
    """
    if budget is None:
        budget = MATRIX_BUDGET

    if budget <= 0:
        raise InvalidArgumentError(f"The explicit-matrix budget must be positive, got {budget}.")

    size = geom.n_rays * geom.n_pixels
    if size > budget:
        raise ResourceLimitError(
            f"A {geom.n_rays} x {geom.n_pixels} system matrix ({size} entries) exceeds the budget of {budget}."
        )

    return SystemMatrix(projection_matrix(geom), geometry=geom)
