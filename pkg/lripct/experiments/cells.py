from __future__ import annotations

from typing import Any

import time

import numpy as np

from lripct.geometry import default_geometry
from lripct.metrics import evaluate
from lripct.operators import DownSampler, downsample, forward_project
from lripct.reconstruction import fbp
from lripct.simulation import noise_preset, shepp_logan
from lripct.utils.exceptions import InvalidArgumentError
from lripct.variational import (
    SolverParams,
    lrip_reconstruct,
    make_prior,
    pd_reconstruct,
    tv_reconstruct,
)

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

METHODS = ("fbp", "tv", "pd", "lrip")
PRIOR_SOURCES = ("fbp", "tv", "oracle")


def reconstruct_cell(
    size: int,
    coverage_deg: float,
    noise: str,
    seed: int,
    method: str,
    params: dict[str, Any],
    tau: int = 2,
    prior: str = "tv",
) -> dict[str, Any]:
    """Simulates one limited-angle scan of the Shepp-Logan phantom and reconstructs it.

    Parameters
    ----------
    size : int
    coverage_deg : float
    noise : str
        Noise preset name.
    seed : int
    method : str
        ``fbp``, ``tv``, ``pd`` (primal-dual without prior) or ``lrip``.
    params : dict[str, Any]
        ``SolverParams`` fields.
    tau : int, defaults to 2
        Down-sampling factor of the ``lrip`` prior.
    prior : str, defaults to "tv"
        Source of the ``lrip`` prior: ``fbp``, ``tv`` or ``oracle`` (the down-sampled phantom).

    Returns
    -------
    values : dict[str, Any]
        ``psnr``, ``rmse``, ``ssim``, ``joint``, ``time_ms`` and the reconstructed ``image`` values.
    """
    if method not in METHODS:
        raise InvalidArgumentError(f"Unknown method {method!r}. Choose from {', '.join(METHODS)}.")

    if prior not in PRIOR_SOURCES:
        raise InvalidArgumentError(f"Unknown prior source {prior!r}. Choose from {', '.join(PRIOR_SOURCES)}.")

    solver_params = SolverParams(**params)
    phantom = shepp_logan(size)
    geom = default_geometry(size, coverage_deg)
    sino = noise_preset(noise, seed).apply(forward_project(phantom, geom))

    start = time.perf_counter()
    if method == "fbp":
        recon = fbp(sino, geom)
    elif method == "tv":
        recon = tv_reconstruct(sino, geom, solver_params)
    elif method == "pd":
        recon = pd_reconstruct(sino, geom, solver_params)
    else:
        if prior == "oracle":
            u_l = downsample(phantom, DownSampler(tau, size))
        else:
            u_l = make_prior(sino, geom, tau, prior, solver_params)  # type: ignore

        recon = lrip_reconstruct(sino, geom, u_l, tau, solver_params)

    elapsed = time.perf_counter() - start
    evaluation = evaluate(method, recon, phantom)

    return {
        "psnr": evaluation.psnr,
        "rmse": evaluation.rmse,
        "ssim": evaluation.ssim,
        "joint": evaluation.joint,
        "time_ms": 1000.0 * elapsed,
        "image": np.array(recon.values),
    }
