from __future__ import annotations

from typing import Any

from dataclasses import dataclass

import numpy as np
from typing_extensions import Literal

from lripct.geometry import Sinogram
from lripct.utils.exceptions import InvalidArgumentError
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)

NoiseKind = Literal["gaussian", "poisson"]


def _generator(seed: int) -> np.random.Generator:
    # Philox is counter-based: every field is one vectorized draw over the flat index
    return np.random.Generator(np.random.Philox(int(seed)))


def add_gaussian(sino: Sinogram, level: float, seed: int = 0) -> Sinogram:
    """Adds i.i.d. zero-mean Gaussian noise with standard deviation ``level * mean(|sino|)``."""
    if not level > 0:
        raise InvalidArgumentError(f"The noise level must be positive, got {level}.")

    std = level * float(np.mean(np.abs(sino.values)))
    noise = _generator(seed).standard_normal(sino.values.size).reshape(sino.shape)

    return Sinogram(sino.values + std * noise)


def add_poisson(sino: Sinogram, i0: int, seed: int = 0) -> Sinogram:
    """Simulates photon counting with ``i0`` incident photons per ray.

    Counts ``c ~ Poisson(i0 exp(-g))`` are clamped to at least 1 and converted back to ``-ln(c / i0)``.
    """
    if int(i0) != i0 or i0 < 1:
        raise InvalidArgumentError(f"The incident photon count must be a positive integer, got {i0}.")

    if np.any(sino.values < 0):
        raise InvalidArgumentError("Poisson noise needs nonnegative line integrals.")

    counts = _generator(seed).poisson(i0 * np.exp(-sino.values.reshape(-1))).reshape(sino.shape)
    counts = np.maximum(counts, 1)

    return Sinogram(-np.log(counts / float(i0)))


@dataclass(frozen=True)
class NoiseSpec:
    """Noise protocol of a simulated scan.

    Parameters
    ----------
    kind : NoiseKind
    level : float
        Relative standard deviation for ``gaussian``, incident photon count for ``poisson``.
    seed : int, defaults to 0
    """

    kind: NoiseKind
    level: float
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("gaussian", "poisson"):
            raise InvalidArgumentError(f"Unknown noise kind {self.kind!r}. Choose from gaussian, poisson.")

        if not np.isfinite(self.level) or self.level <= 0:
            raise InvalidArgumentError(f"The noise level must be positive, got {self.level}.")

        if self.kind == "poisson" and int(self.level) != self.level:
            raise InvalidArgumentError(f"The incident photon count must be an integer, got {self.level}.")

        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise InvalidArgumentError(f"The seed must be a 64-bit unsigned integer, got {self.seed}.")

        object.__setattr__(self, "seed", int(self.seed))

    @property
    def meta(self) -> dict[str, Any]:
        return {"kind": self.kind, "level": self.level, "seed": self.seed}

    @property
    def label(self) -> str:
        """Short name, e.g. ``gaussian-5`` or ``poisson-100``."""
        if self.kind == "gaussian":
            return f"gaussian-{100 * self.level:g}"

        return f"poisson-{int(self.level)}"

    def with_seed(self, seed: int) -> NoiseSpec:
        return NoiseSpec(self.kind, self.level, seed)

    def apply(self, sino: Sinogram) -> Sinogram:
        """Corrupts ``sino`` with this protocol."""
        logger.debug(f"Applying {self.label} noise with seed {self.seed}.")
        if self.kind == "gaussian":
            return add_gaussian(sino, self.level, self.seed)

        return add_poisson(sino, int(self.level), self.seed)


NOISE_PRESETS = {
    "gaussian-5": NoiseSpec("gaussian", 0.05),
    "gaussian-10": NoiseSpec("gaussian", 0.10),
    "poisson-100": NoiseSpec("poisson", 100),
}


def noise_preset(name: str, seed: int = 0) -> NoiseSpec:
    """The noise protocol called ``name`` (one of ``NOISE_PRESETS``) with ``seed``."""
    try:
        return NOISE_PRESETS[name].with_seed(seed)
    except KeyError:
        raise InvalidArgumentError(f"Unknown noise preset {name!r}. Choose from {', '.join(NOISE_PRESETS)}.")
