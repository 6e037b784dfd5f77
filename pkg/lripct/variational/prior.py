from __future__ import annotations

from typing_extensions import Literal

from lripct.geometry import Image, ScanGeometry, Sinogram
from lripct.reconstruction import fbp
from lripct.utils.exceptions import InvalidArgumentError
from lripct.utils.logging import get_logger
from lripct.variational.params import SolverParams
from lripct.variational.tv_reconstruct import tv_reconstruct

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)

PriorMethod = Literal["fbp", "tv"]
PRIOR_METHODS = ("fbp", "tv")


def make_prior(
    sino: Sinogram,
    geom: ScanGeometry,
    tau: int,
    method: PriorMethod = "tv",
    params: SolverParams | None = None,
) -> Image:
    """Low-resolution image prior: reconstructs ``sino`` on the grid coarsened by ``tau``.

    The coarse geometry keeps views and bins, so the same sinogram is used.

    Parameters
    ----------
    sino : Sinogram
    geom : ScanGeometry
    tau : int
        Coarsening factor; ``geom.n`` must be divisible by it.
    method : PriorMethod, defaults to "tv"
    params : SolverParams | None, defaults to None
        Solver parameters of the ``tv`` method. Defaults to ``SolverParams()``.

    Returns
    -------
    u_l : Image
        Side ``geom.n // tau``.
    """
    if method not in PRIOR_METHODS:
        raise InvalidArgumentError(f"Unknown prior method {method!r}. Choose from {', '.join(PRIOR_METHODS)}.")

    low = geom.coarsen(tau)
    logger.debug(f"Building a {method} prior on the {low.n} x {low.n} grid.")

    if method == "fbp":
        return fbp(sino, low)

    return tv_reconstruct(sino, low, params or SolverParams())
