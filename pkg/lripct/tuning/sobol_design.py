from __future__ import annotations

from typing import Any

import warnings

import numpy as np
from ConfigSpace import Configuration, ConfigurationSpace
from scipy.stats.qmc import Sobol

from lripct.utils.exceptions import InvalidArgumentError
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


class SobolDesign:
    """Scrambled Sobol sequence over a continuous configuration space. See
    https://scipy.github.io/devdocs/reference/generated/scipy.stats.qmc.Sobol.html for further information.

    Parameters
    ----------
    configspace : ConfigurationSpace
        Only float hyperparameters are supported.
    n_configs : int
        Number of configurations to draw.
    seed : int, defaults to 0
    """

    def __init__(self, configspace: ConfigurationSpace, n_configs: int, seed: int = 0) -> None:
        if n_configs < 1:
            raise InvalidArgumentError(f"The number of configurations must be positive, got {n_configs}.")

        self._configspace = configspace
        self._n_configs = n_configs
        self._seed = seed

    @property
    def meta(self) -> dict[str, Any]:
        """Returns the meta data of the created object."""
        return {
            "name": self.__class__.__name__,
            "n_configs": self._n_configs,
            "seed": self._seed,
        }

    def select_configurations(self) -> list[Configuration]:
        """Draws ``n_configs`` configurations; the same seed always gives the same list."""
        dim = len(list(self._configspace.values()))
        sobol_gen = Sobol(d=dim, scramble=True, seed=self._seed)

        with warnings.catch_warnings():
            # Sobol warns if ``n_configs`` is not a power of two
            warnings.simplefilter("ignore")
            design = sobol_gen.random(self._n_configs)

        configs = []
        for vector in design:
            config = Configuration(self._configspace, vector=np.asarray(vector, dtype=np.float64))
            config.origin = "Sobol design"
            configs.append(config)

        logger.info(f"Using {len(configs)} Sobol design configurations.")

        return configs
