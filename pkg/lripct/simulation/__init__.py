from lripct.simulation.noise import (
    NOISE_PRESETS,
    NoiseSpec,
    add_gaussian,
    add_poisson,
    noise_preset,
)
from lripct.simulation.phantoms import (
    SHEPP_LOGAN_ELLIPSES,
    disk_phantom,
    ellipse_mask,
    pixel_centers,
    shepp_logan,
)

__all__ = [
    "shepp_logan",
    "disk_phantom",
    "ellipse_mask",
    "pixel_centers",
    "SHEPP_LOGAN_ELLIPSES",
    "add_gaussian",
    "add_poisson",
    "NoiseSpec",
    "NOISE_PRESETS",
    "noise_preset",
]
