from __future__ import annotations

from typing import Any

import math
from dataclasses import dataclass, replace

import numpy as np

from lripct.utils.exceptions import InvalidArgumentError
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


@dataclass(frozen=True)
class ScanGeometry:
    """Fan-beam acquisition with a flat detector. The image is centered at the origin.

    At view angle ``beta`` the source sits at ``source_radius * (cos beta, sin beta)``, the detector midline
    at ``-detector_radius * (cos beta, sin beta)`` and the detector axis points along ``(-sin beta, cos beta)``.

    Parameters
    ----------
    n : int
        Image side length in pixels.
    pixel_size : float
        Side of one pixel.
    n_views : int
        Number of projection angles. Must equal ``floor(angular_range_deg / angle_step_deg)``.
    n_bins : int
        Number of detector elements.
    angular_range_deg : float
        Total scanning arc in degrees, in (0, 360].
    angle_step_deg : float
        Spacing between consecutive views in degrees.
    source_radius : float
        Distance from the rotation center to the source. Must place the source outside the image disk.
    detector_radius : float
        Distance from the rotation center to the detector midline.
    bin_width : float
        Width of one detector element.
    """

    n: int
    pixel_size: float
    n_views: int
    n_bins: int
    angular_range_deg: float
    angle_step_deg: float
    source_radius: float
    detector_radius: float
    bin_width: float

    def __post_init__(self) -> None:
        """Checks whether the geometry is consistent."""
        for key in ("n", "n_views", "n_bins"):
            value = getattr(self, key)
            if int(value) != value or value < 1:
                raise InvalidArgumentError(f"`{key}` must be a positive integer, got {value}.")

            object.__setattr__(self, key, int(value))

        for key in ("pixel_size", "angle_step_deg", "source_radius", "detector_radius", "bin_width"):
            value = getattr(self, key)
            if not np.isfinite(value) or value <= 0:
                raise InvalidArgumentError(f"`{key}` must be a positive real, got {value}.")

            object.__setattr__(self, key, float(value))

        if not 0 < self.angular_range_deg <= 360:
            raise InvalidArgumentError(f"`angular_range_deg` must lie in (0, 360], got {self.angular_range_deg}.")

        object.__setattr__(self, "angular_range_deg", float(self.angular_range_deg))

        expected_views = count_views(self.angular_range_deg, self.angle_step_deg)
        if self.n_views != expected_views:
            raise InvalidArgumentError(
                f"`n_views` must be floor({self.angular_range_deg} / {self.angle_step_deg}) = {expected_views}, "
                f"got {self.n_views}."
            )

        if self.source_radius <= self.image_radius:
            raise InvalidArgumentError(
                f"The source ({self.source_radius}) must lie outside the image disk of radius {self.image_radius}."
            )

    @property
    def meta(self) -> dict[str, Any]:
        """Returns the settings of the geometry."""
        return {
            "n": self.n,
            "pixel_size": self.pixel_size,
            "n_views": self.n_views,
            "n_bins": self.n_bins,
            "angular_range_deg": self.angular_range_deg,
            "angle_step_deg": self.angle_step_deg,
            "source_radius": self.source_radius,
            "detector_radius": self.detector_radius,
            "bin_width": self.bin_width,
        }

    @property
    def n_pixels(self) -> int:
        """N = n * n."""
        return self.n * self.n

    @property
    def n_rays(self) -> int:
        """M = n_views * n_bins."""
        return self.n_views * self.n_bins

    @property
    def image_radius(self) -> float:
        """Half diagonal of the image square."""
        return self.n * self.pixel_size / math.sqrt(2.0)

    @property
    def extent(self) -> float:
        """Half side length of the image square."""
        return self.n * self.pixel_size / 2.0

    def coarsen(self, factor: int) -> ScanGeometry:
        """Geometry of the same scanner on a grid that is ``factor`` times coarser.

        Views and bins are unchanged; only the number of pixels changes, the physical extent stays the same.
        """
        if factor < 1 or self.n % factor != 0:
            raise InvalidArgumentError(f"Image side {self.n} is not divisible by the down-sampling factor {factor}.")

        return replace(self, n=self.n // factor, pixel_size=self.pixel_size * factor)

    def with_coverage(self, coverage_deg: float) -> ScanGeometry:
        """Same scanner with a different scanning arc."""
        return replace(
            self,
            angular_range_deg=coverage_deg,
            n_views=count_views(coverage_deg, self.angle_step_deg),
        )

    def bin_centers(self) -> np.ndarray:
        """Detector coordinates of the bin centers along the detector axis."""
        return (np.arange(self.n_bins) - (self.n_bins - 1) / 2.0) * self.bin_width

    def ray_offsets(self) -> np.ndarray:
        """Signed perpendicular distance between the rotation center and the ray of each bin."""
        gamma = np.arctan2(self.bin_centers(), self.source_radius + self.detector_radius)
        return self.source_radius * np.sin(gamma)

    def ray_endpoints(self) -> tuple[np.ndarray, np.ndarray]:
        """Source and detector points of every ray.

        Returns
        -------
        sources : np.ndarray [n_views, n_bins, 2]
        detectors : np.ndarray [n_views, n_bins, 2]
        """
        beta = view_angles(self)
        cos, sin = np.cos(beta)[:, None], np.sin(beta)[:, None]
        u = self.bin_centers()[None, :]

        sources = np.stack(
            np.broadcast_arrays(self.source_radius * cos, self.source_radius * sin),
            axis=-1,
        )
        sources = np.broadcast_to(sources, (self.n_views, self.n_bins, 2))
        detectors = np.stack(
            (-self.detector_radius * cos - u * sin, -self.detector_radius * sin + u * cos),
            axis=-1,
        )

        return sources, detectors


def count_views(angular_range_deg: float, angle_step_deg: float) -> int:
    """floor(range / step), tolerant to round-off in the ratio."""
    ratio = angular_range_deg / angle_step_deg
    return int(math.floor(ratio + 1e-9))


def view_angles(geom: ScanGeometry) -> np.ndarray:
    """Returns the ``n_views`` view angles in radians, starting at 0 in steps of ``angle_step_deg``."""
    return np.deg2rad(np.arange(geom.n_views) * geom.angle_step_deg)


def default_geometry(n: int, coverage_deg: float) -> ScanGeometry:
    """Desk-scale scanner for an ``n`` x ``n`` image on [-1, 1]^2.

    Uses ``ceil(1.5 n)`` bins, 1 degree steps, source and detector at distance 3 from the center and a bin width
    so that the fan exactly covers the image diagonal.

    Parameters
    ----------
    n : int
        Image side in pixels, at least 2.
    coverage_deg : float
        Scanning arc in degrees.

    Returns
    -------
    geom : ScanGeometry
    """
    if n < 2:
        raise InvalidArgumentError(f"Image side must be at least 2, got {n}.")

    source_radius = 3.0
    detector_radius = 3.0
    n_bins = int(math.ceil(1.5 * n))
    angle_step_deg = 1.0

    # Half fan angle that reaches the image corners
    half_fan = math.asin(math.sqrt(2.0) / source_radius)
    detector_half_width = (source_radius + detector_radius) * math.tan(half_fan)

    geom = ScanGeometry(
        n=n,
        pixel_size=2.0 / n,
        n_views=count_views(coverage_deg, angle_step_deg),
        n_bins=n_bins,
        angular_range_deg=coverage_deg,
        angle_step_deg=angle_step_deg,
        source_radius=source_radius,
        detector_radius=detector_radius,
        bin_width=2.0 * detector_half_width / n_bins,
    )
    logger.debug(f"Default geometry for n={n}, coverage={coverage_deg}: {geom.meta}")

    return geom
