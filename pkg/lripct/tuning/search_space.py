from __future__ import annotations

from ConfigSpace import ConfigurationSpace, Float

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

# Ranges the TV baseline is tuned over. lambda_tv weights the physical TV (pixel_size * sum |grad u|), so the
# same range applies on every grid
LAMBDA_RANGE = (0.9, 2.5)
TAU_RANGE = (0.5, 0.9)
SIGMA_RANGE = (0.2, 0.5)


def tv_search_space(seed: int = 0) -> ConfigurationSpace:
    """Search space of the TV regularization weight and the primal and dual step sizes."""
    cs = ConfigurationSpace(name="tv", seed=seed)
    cs.add(
        Float("lambda_tv", LAMBDA_RANGE, default=1.0),
        Float("tau_step", TAU_RANGE, default=0.9),
        Float("sigma_step", SIGMA_RANGE, default=0.5),
    )
    return cs
