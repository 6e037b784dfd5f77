from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from lripct.callback import Callback
from lripct.geometry import Image, ScanGeometry, Sinogram
from lripct.operators import backproject, operator_norm, project
from lripct.utils.exceptions import InvalidArgumentError, NumericalDivergenceError
from lripct.utils.logging import get_logger
from lripct.variational.objective import iteration_diagnostics, primal_objective
from lripct.variational.params import SolverParams
from lripct.variational.total_variation import div, grad, project_dual_ball

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


@dataclass
class PrimalDualState:
    """Iterates of the primal-dual TV solver."""

    u: Image
    u_bar: Image
    p: Sinogram
    k: int


def tv_reconstruct(
    sino: Sinogram,
    geom: ScanGeometry,
    params: SolverParams,
    callbacks: list[Callback] | None = None,
    reference: Image | None = None,
) -> Image:
    """Primal-dual (Chambolle-Pock) solution of ``min_u 1/2 ||A u - f||^2 + lambda_tv * TV(u)``.

    Starts from the zero image and runs ``params.outer_iters`` iterations with over-relaxation 1 and steps
    ``tau_step / L``, ``sigma_step / L`` where ``L = sqrt(||A||^2 + 8)``.

    Parameters
    ----------
    sino : Sinogram
    geom : ScanGeometry
    params : SolverParams
    callbacks : list[Callback] | None, defaults to None
    reference : Image | None, defaults to None
        Ground truth for the PSNR column of the diagnostics.

    Returns
    -------
    img : Image
        The last primal iterate.
    """
    if not isinstance(params, SolverParams):
        raise InvalidArgumentError(f"Expected SolverParams, got {type(params).__name__}.")

    if sino.shape != (geom.n_views, geom.n_bins):
        raise InvalidArgumentError(
            f"Sinogram of shape {sino.shape} does not match {geom.n_views} views x {geom.n_bins} bins."
        )

    callbacks = callbacks or []
    f = sino.values
    lipschitz = np.sqrt(operator_norm(geom) ** 2 + 8.0)
    tau = params.tau_step / lipschitz
    sigma = params.sigma_step / lipschitz
    weight = params.lambda_tv * geom.pixel_size

    u = np.zeros((geom.n, geom.n))
    u_bar = np.zeros_like(u)
    p = np.zeros_like(f)
    q = np.zeros((2,) + u.shape)

    logger.info(
        f"TV reconstruction on a {geom.n} x {geom.n} grid from {geom.n_views} views "
        f"({params.outer_iters} iterations, lambda={params.lambda_tv})."
    )
    for callback in callbacks:
        callback.on_start("tv", PrimalDualState(Image(u), Image(u_bar), Sinogram(p), 0))

    iteration = 0
    for k in range(params.outer_iters):
        iteration = k + 1
        p = (p + sigma * (project(u_bar, geom) - f)) / (1.0 + sigma)
        if weight > 0:
            q = project_dual_ball(q + sigma * grad(u_bar), weight)

        u_new = u - tau * (backproject(p, geom) - div(q))
        if params.nonneg:
            u_new = np.maximum(u_new, 0.0)

        u_bar = 2.0 * u_new - u
        u = u_new

        if not (np.all(np.isfinite(u_bar)) and np.all(np.isfinite(p))):
            raise NumericalDivergenceError(f"TV reconstruction diverged in iteration {k}.", iteration=k)

        if callbacks:
            state = PrimalDualState(Image(u), Image(u_bar), Sinogram(p), k + 1)
            diagnostics = iteration_diagnostics(u, f, geom, params.lambda_tv, reference)
            logger.debug(f"[tv {k + 1}] objective {diagnostics['objective']:.6e}")
            if any([callback.on_iteration_end(k + 1, state, diagnostics) is False for callback in callbacks]):
                logger.info(f"TV reconstruction stopped by a callback after {k + 1} iterations.")
                break

    for callback in callbacks:
        callback.on_end(PrimalDualState(Image(u), Image(u_bar), Sinogram(p), iteration))

    logger.info(f"TV reconstruction finished with objective {primal_objective(u, f, geom, params.lambda_tv):.6e}.")

    return Image(u)
