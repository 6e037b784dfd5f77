from __future__ import annotations

from typing import Any

from dataclasses import dataclass, fields

import numpy as np

from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


@dataclass(frozen=True)
class SolverParams:
    """Parameters shared by the variational solvers.

    Step sizes are dimensionless: the primal-dual TV solver uses ``tau_step / L`` and ``sigma_step / L`` with
    ``L = sqrt(||A||^2 + 8)``, the LRIP solver uses ``tau_step / ||A||``. Convergence of the TV solver therefore
    requires ``tau_step * sigma_step <= 1``.

    The TV term is measured in physical units, ``pixel_size * sum |grad u|``, the discretization of the integral
    of ``|grad u|`` over the image square. ``lambda_tv`` therefore keeps its meaning across grid sizes; in pixel
    units the weight is ``lambda_tv * pixel_size``.

    Parameters
    ----------
    mu : float, defaults to 1.0
        Weight of the proximity to the previous iterate in the prior step. Large values switch the prior off.
    r : float, defaults to 1.0
        Weight of the low-resolution prior. 0 disables it.
    tau_step : float, defaults to 0.9
        Primal step.
    sigma_step : float, defaults to 0.5
        Dual step of the TV solver.
    lambda_tv : float, defaults to 1.0
        Total variation weight.
    outer_iters : int, defaults to 200
    inner_tv_iters : int, defaults to 20
        Dual projected-gradient iterations of every TV proximal step.
    nonneg : bool, defaults to False
        Clamp the image iterate at zero after every primal step.
    """

    mu: float = 1.0
    r: float = 1.0
    tau_step: float = 0.9
    sigma_step: float = 0.5
    lambda_tv: float = 1.0
    outer_iters: int = 200
    inner_tv_iters: int = 20
    nonneg: bool = False

    def __post_init__(self) -> None:
        """Checks whether the config is valid."""
        for key in ("mu", "tau_step", "sigma_step"):
            value = getattr(self, key)
            if not np.isfinite(value) or value <= 0:
                raise InvalidArgumentError(f"`{key}` must be a positive real, got {value}.")

        for key in ("r", "lambda_tv"):
            value = getattr(self, key)
            if not np.isfinite(value) or value < 0:
                raise InvalidArgumentError(f"`{key}` must be a nonnegative real, got {value}.")

        for key in ("outer_iters", "inner_tv_iters"):
            value = getattr(self, key)
            if int(value) != value or value < 1:
                raise InvalidArgumentError(f"`{key}` must be a positive integer, got {value}.")

            object.__setattr__(self, key, int(value))

        if self.tau_step * self.sigma_step > 1.0 + 1e-12:
            raise InvalidArgumentError(
                f"Step sizes violate tau_step * sigma_step <= 1: {self.tau_step} * {self.sigma_step}."
            )

        for key in ("mu", "r", "tau_step", "sigma_step", "lambda_tv"):
            object.__setattr__(self, key, float(getattr(self, key)))

        object.__setattr__(self, "nonneg", bool(self.nonneg))

    @property
    def meta(self) -> dict[str, Any]:
        """Returns the settings of the solver."""
        return {f.name: getattr(self, f.name) for f in fields(self)}
