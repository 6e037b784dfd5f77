from __future__ import annotations

import numpy as np

from lripct.geometry import Image, ScanGeometry
from lripct.metrics import psnr
from lripct.operators import project
from lripct.variational.total_variation import tv

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def primal_objective(u: np.ndarray, f: np.ndarray, geom: ScanGeometry, lambda_tv: float) -> float:
    """``1/2 ||A u - f||^2 + lambda_tv * pixel_size * TV(u)``."""
    data = project(u, geom) - f
    return float(0.5 * np.sum(data**2) + lambda_tv * geom.pixel_size * tv(u))


def iteration_diagnostics(
    u: np.ndarray,
    f: np.ndarray,
    geom: ScanGeometry,
    lambda_tv: float,
    reference: Image | None = None,
) -> dict[str, float]:
    """Objective, data residual ``||A u - f||`` and PSNR against ``reference`` (NaN without one)."""
    data = project(u, geom) - f
    return {
        "objective": float(0.5 * np.sum(data**2) + lambda_tv * geom.pixel_size * tv(u)),
        "data_residual": float(np.linalg.norm(data)),
        "psnr": float("nan") if reference is None else psnr(u, reference),
    }
