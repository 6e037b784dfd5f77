from __future__ import annotations

from typing import Any

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from lripct.runner import resolve_n_workers
from lripct.simulation import NOISE_PRESETS
from lripct.utils.exceptions import InvalidArgumentError
from lripct.utils.logging import get_logger
from lripct.utils.numpyencoder import NumpyEncoder
from lripct.variational import SolverParams

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExperimentScenario:
    """The scenario gives the context in which an experiment grid is run.

    Parameters
    ----------
    name : str, defaults to "table3"
        Name of the experiment.
    output_directory : Path, defaults to Path("lripct_output")
        Directory for tables, images and ``scenario.json``.
    seed : int, defaults to 0
        Noise seed, shared by all cells.
    n_workers : int | None, defaults to None
        Number of parallel workers. Falls back to ``LRIPCT_THREADS``, then to 1.
    size : int, defaults to 64
        Image side.
    coverages : tuple[float, ...], defaults to (150, 120, 90)
        Scanning arcs in degrees.
    noises : tuple[str, ...], defaults to all presets
        Noise preset names.
    taus : tuple[int, ...], defaults to (2,)
        Down-sampling factors of the priors.
    params : SolverParams, defaults to SolverParams()
    """

    name: str = "table3"
    output_directory: Path = Path("lripct_output")
    seed: int = 0
    n_workers: int | None = None
    size: int = 64
    coverages: tuple[float, ...] = (150.0, 120.0, 90.0)
    noises: tuple[str, ...] = tuple(NOISE_PRESETS)
    taus: tuple[int, ...] = (2,)
    params: SolverParams = field(default_factory=SolverParams)

    def __post_init__(self) -> None:
        """Checks whether the config is valid."""
        object.__setattr__(self, "output_directory", Path(self.output_directory))
        object.__setattr__(self, "n_workers", resolve_n_workers(self.n_workers))
        object.__setattr__(self, "coverages", tuple(float(c) for c in self.coverages))
        object.__setattr__(self, "noises", tuple(self.noises))
        object.__setattr__(self, "taus", tuple(int(t) for t in self.taus))

        if self.size < 16:
            raise InvalidArgumentError(f"Experiments need a size of at least 16, got {self.size}.")

        for noise in self.noises:
            if noise not in NOISE_PRESETS:
                raise InvalidArgumentError(f"Unknown noise preset {noise!r}. Choose from {', '.join(NOISE_PRESETS)}.")

        if len(self.taus) == 0:
            raise InvalidArgumentError("At least one down-sampling factor is required.")

        for tau in self.taus:
            if tau < 1 or self.size % tau != 0:
                raise InvalidArgumentError(f"Size {self.size} is not divisible by the factor {tau}.")

    @property
    def meta(self) -> dict[str, Any]:
        """Returns the settings of the scenario."""
        data = asdict(self)
        data["output_directory"] = str(self.output_directory)
        return data

    def save(self) -> None:
        """Saves the scenario to ``output_directory / scenario.json``."""
        self.output_directory.mkdir(parents=True, exist_ok=True)
        filename = self.output_directory / "scenario.json"
        with open(filename, "w") as fh:
            json.dump(self.meta, fh, indent=4, cls=NumpyEncoder)

        logger.debug(f"Saved scenario to {filename}.")

    @staticmethod
    def load(path: Path) -> ExperimentScenario:
        """Loads a scenario from ``path / scenario.json``."""
        filename = Path(path) / "scenario.json"
        with open(filename, "r") as fh:
            data = json.load(fh)

        data["output_directory"] = Path(data["output_directory"])
        data["params"] = SolverParams(**data["params"])

        return ExperimentScenario(**data)
