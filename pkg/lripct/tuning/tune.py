from __future__ import annotations

from typing import Any

from dataclasses import dataclass, replace

import numpy as np

from lripct.geometry import Image, ScanGeometry, Sinogram
from lripct.metrics import psnr
from lripct.runner import AbstractRunner, Cell, SerialRunner, StatusType
from lripct.tuning.search_space import tv_search_space
from lripct.tuning.sobol_design import SobolDesign
from lripct.utils.logging import get_logger
from lripct.variational import SolverParams, tv_reconstruct

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)

TUNING_COLUMNS = ["lambda_tv", "tau_step", "sigma_step", "psnr"]


@dataclass(frozen=True)
class TuningResult:
    """Outcome of ``tune_tv``.

    Parameters
    ----------
    best : SolverParams
        Parameters of the configuration with the highest PSNR.
    rows : list[dict[str, float]]
        One row per configuration in design order, ``lambda_tv, tau_step, sigma_step, psnr``.
    """

    best: SolverParams
    rows: list[dict[str, float]]


def _tv_cell(sino: np.ndarray, geom: ScanGeometry, reference: np.ndarray, params: dict[str, Any]) -> dict[str, Any]:
    recon = tv_reconstruct(Sinogram(sino), geom, SolverParams(**params))
    return {"psnr": psnr(recon, Image(reference))}


def tune_tv(
    sino: Sinogram,
    geom: ScanGeometry,
    reference: Image,
    n_configs: int = 16,
    seed: int = 0,
    base_params: SolverParams | None = None,
    runner: AbstractRunner | None = None,
) -> TuningResult:
    """Tunes the TV weight and step sizes of ``tv_reconstruct`` on a Sobol design.

    Every configuration reconstructs ``sino`` and is scored by its PSNR against ``reference``. Ties keep the
    earlier configuration.
    """
    base_params = base_params or SolverParams()
    configs = SobolDesign(tv_search_space(seed), n_configs, seed).select_configurations()

    candidates = [replace(base_params, **dict(config)) for config in configs]
    cells = [
        Cell(
            index=index,
            key=(index,),
            function=_tv_cell,
            kwargs={
                "sino": np.array(sino.values),
                "geom": geom,
                "reference": np.array(reference.values),
                "params": params.meta,
            },
        )
        for index, params in enumerate(candidates)
    ]

    if runner is None:
        runner = SerialRunner()

    rows = []
    best_index, best_psnr = 0, -np.inf
    for result, params in zip(runner.run_cells(cells), candidates):
        value = result.values["psnr"] if result.status == StatusType.SUCCESS else float("nan")
        rows.append(
            {
                "lambda_tv": params.lambda_tv,
                "tau_step": params.tau_step,
                "sigma_step": params.sigma_step,
                "psnr": value,
            }
        )
        if value > best_psnr:
            best_index, best_psnr = result.index, value

    logger.info(f"Best TV configuration {best_index} with PSNR {best_psnr:.3f} dB.")

    return TuningResult(best=candidates[best_index], rows=rows)
