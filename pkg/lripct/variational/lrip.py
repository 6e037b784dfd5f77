from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from lripct.callback import Callback
from lripct.geometry import Image, ScanGeometry, Sinogram
from lripct.operators import DownSampler, backproject, operator_norm, project, upsample_adjoint
from lripct.utils.exceptions import InvalidArgumentError, NumericalDivergenceError
from lripct.utils.logging import get_logger
from lripct.variational.objective import iteration_diagnostics, primal_objective
from lripct.variational.params import SolverParams
from lripct.variational.resolvents import dual_prox_values, u_update_values
from lripct.variational.total_variation import tv_prox_values

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


@dataclass
class LripState:
    """Iterates of the LRIP solver after ``k`` iterations."""

    u: Image
    u_tilde: Image
    p: Sinogram
    k: int


def lrip_reconstruct(
    sino: Sinogram,
    geom: ScanGeometry,
    u_l: Image,
    tau: int,
    params: SolverParams,
    callbacks: list[Callback] | None = None,
    reference: Image | None = None,
) -> Image:
    """Reconstruction constrained by a low-resolution image prior ``u_l`` with ``D u = u_l``.

    Starting from ``p = 0`` and ``u = u_tilde = D^T u_l``, every iteration runs three resolvent steps in order:

    1. prior step: ``u = argmin mu/2 ||u - u_tilde||^2 + r/2 ||D u - u_l||^2``,
    2. dual step: ``p = (p + t (A u_tilde - f)) / (1 + t)``,
    3. TV step: ``u_tilde = prox_{t lambda TV}(u - t A* p)``,

    with the effective step ``t = tau_step / ||A||``. The prior step's output of the last iteration is returned.

    Parameters
    ----------
    sino : Sinogram
    geom : ScanGeometry
    u_l : Image
        Prior on the grid coarsened by ``tau``.
    tau : int
        Down-sampling factor of the prior.
    params : SolverParams
    callbacks : list[Callback] | None, defaults to None
    reference : Image | None, defaults to None
        Ground truth for the PSNR column of the diagnostics.

    Returns
    -------
    img : Image
    """
    if not isinstance(params, SolverParams):
        raise InvalidArgumentError(f"Expected SolverParams, got {type(params).__name__}.")

    if sino.shape != (geom.n_views, geom.n_bins):
        raise InvalidArgumentError(
            f"Sinogram of shape {sino.shape} does not match {geom.n_views} views x {geom.n_bins} bins."
        )

    d = DownSampler(tau, geom.n)
    prior = upsample_adjoint(u_l, d).values
    mask = d.mask()

    callbacks = callbacks or []
    f = sino.values
    step = params.tau_step / operator_norm(geom)
    weight = step * params.lambda_tv * geom.pixel_size

    u = prior.copy()
    u_tilde = prior.copy()
    p = np.zeros_like(f)

    logger.info(
        f"LRIP reconstruction on a {geom.n} x {geom.n} grid with a 1/{tau} prior "
        f"({params.outer_iters} iterations, mu={params.mu}, r={params.r})."
    )
    for callback in callbacks:
        callback.on_start("lrip", LripState(Image(u), Image(u_tilde), Sinogram(p), 0))

    iteration = 0
    for k in range(params.outer_iters):
        iteration = k + 1
        u = u_update_values(u_tilde, prior, mask, params.mu, params.r)
        p = dual_prox_values(p, project(u_tilde, geom), f, step)
        u_tilde = tv_prox_values(u - step * backproject(p, geom), weight, params.inner_tv_iters)
        if params.nonneg:
            u_tilde = np.maximum(u_tilde, 0.0)

        if not (np.all(np.isfinite(u)) and np.all(np.isfinite(u_tilde)) and np.all(np.isfinite(p))):
            raise NumericalDivergenceError(f"LRIP reconstruction diverged in iteration {k}.", iteration=k)

        if callbacks:
            state = LripState(Image(u), Image(u_tilde), Sinogram(p), k + 1)
            diagnostics = iteration_diagnostics(u, f, geom, params.lambda_tv, reference)
            logger.debug(f"[lrip {k + 1}] objective {diagnostics['objective']:.6e}")
            if any([callback.on_iteration_end(k + 1, state, diagnostics) is False for callback in callbacks]):
                logger.info(f"LRIP reconstruction stopped by a callback after {k + 1} iterations.")
                break

    for callback in callbacks:
        callback.on_end(LripState(Image(u), Image(u_tilde), Sinogram(p), iteration))

    logger.info(f"LRIP reconstruction finished with objective {primal_objective(u, f, geom, params.lambda_tv):.6e}.")

    return Image(u)


def pd_reconstruct(
    sino: Sinogram,
    geom: ScanGeometry,
    params: SolverParams,
    callbacks: list[Callback] | None = None,
    reference: Image | None = None,
) -> Image:
    """The LRIP iteration without a prior (``r = 0``), started from the zero image."""
    no_prior = SolverParams(**{**params.meta, "r": 0.0})
    return lrip_reconstruct(sino, geom, Image.zeros(geom.n), 1, no_prior, callbacks, reference)
