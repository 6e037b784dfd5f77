from __future__ import annotations

import numpy as np
from scipy.signal import fftconvolve
from typing_extensions import Literal

from lripct.geometry import Image, ScanGeometry, Sinogram, view_angles
from lripct.utils.exceptions import InvalidArgumentError
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)

FilterKind = Literal["ramp", "hann"]
FILTER_KINDS = ("ramp", "hann")


def ramp_kernel(n_bins: int, spacing: float) -> np.ndarray:
    """Discrete-space ramp kernel on ``2 n_bins - 1`` taps, centered at index ``n_bins - 1``.

    Center tap ``1 / (4 spacing^2)``, odd taps ``-1 / (pi k spacing)^2``, even taps 0. The result is halved for the
    full-rotation fan-beam formula and multiplied by ``spacing`` for the convolution sum.
    """
    k = np.arange(-(n_bins - 1), n_bins)
    kernel = np.zeros(len(k))
    kernel[k == 0] = 1.0 / (4.0 * spacing**2)
    odd = k % 2 == 1
    kernel[odd] = -1.0 / (np.pi * k[odd] * spacing) ** 2

    return 0.5 * kernel * spacing


def filter_views(weighted: np.ndarray, spacing: float, filter_kind: FilterKind = "ramp") -> np.ndarray:
    """Filters every row of ``weighted`` with the ramp kernel, optionally apodized with a Hann window.

    Parameters
    ----------
    weighted : np.ndarray [n_views, n_bins]
    spacing : float
        Bin spacing on the detector the kernel is sampled on.
    filter_kind : FilterKind, defaults to "ramp"

    Returns
    -------
    filtered : np.ndarray [n_views, n_bins]
    """
    n_bins = weighted.shape[1]
    kernel = ramp_kernel(n_bins, spacing)

    if filter_kind == "ramp":
        full = fftconvolve(weighted, kernel[None, :], mode="full", axes=1)
        return full[:, n_bins - 1 : 2 * n_bins - 1]

    # Zero-padded to the next power of two >= 2 n_bins, no circular wrap
    size = 1 << int(np.ceil(np.log2(2 * n_bins)))
    padded_kernel = np.zeros(size)
    padded_kernel[: len(kernel)] = kernel
    spectrum = np.fft.rfft(padded_kernel)
    freq = np.fft.rfftfreq(size)
    spectrum *= 0.5 * (1.0 + np.cos(2.0 * np.pi * freq))

    full = np.fft.irfft(np.fft.rfft(weighted, n=size, axis=1) * spectrum[None, :], n=size, axis=1)
    return full[:, n_bins - 1 : 2 * n_bins - 1]


def fbp(sino: Sinogram, geom: ScanGeometry, filter_kind: FilterKind = "ramp") -> Image:
    """Fan-beam filtered back-projection for a flat detector.

    Bins are rescaled to a virtual detector through the rotation center. Each view is cosine-weighted, ramp
    filtered and back-projected with the inverse squared distance weight, using linear interpolation between
    bins. The angular integral is approximated by the sum over views times the angle step; short scans are not
    renormalized.

    Parameters
    ----------
    sino : Sinogram
    geom : ScanGeometry
    filter_kind : FilterKind, defaults to "ramp"
        ``ramp`` or ``hann`` (ramp apodized with a Hann window).

    Returns
    -------
    img : Image
    """
    if filter_kind not in FILTER_KINDS:
        raise InvalidArgumentError(f"Unknown filter {filter_kind!r}. Choose from {', '.join(FILTER_KINDS)}.")

    if sino.shape != (geom.n_views, geom.n_bins):
        raise InvalidArgumentError(
            f"Sinogram of shape {sino.shape} does not match {geom.n_views} views x {geom.n_bins} bins."
        )

    radius = geom.source_radius
    magnification = (geom.source_radius + geom.detector_radius) / radius
    u = geom.bin_centers() / magnification
    du = geom.bin_width / magnification

    weighted = sino.values * (radius / np.sqrt(radius**2 + u**2))[None, :]
    filtered = filter_views(weighted, du, filter_kind)

    extent = geom.extent
    centers = -extent + (np.arange(geom.n) + 0.5) * geom.pixel_size
    x = centers[None, :]
    y = centers[::-1][:, None]

    values = np.zeros((geom.n, geom.n))
    for beta, row in zip(view_angles(geom), filtered):
        cos, sin = np.cos(beta), np.sin(beta)
        distance = radius - x * cos - y * sin
        u_pixel = radius * (-x * sin + y * cos) / distance
        weight = (radius / distance) ** 2
        values += weight * np.interp(u_pixel, u, row, left=0.0, right=0.0)

    values *= np.deg2rad(geom.angle_step_deg)
    logger.debug(f"FBP ({filter_kind}) over {geom.n_views} views on a {geom.n} x {geom.n} grid.")

    return Image(values)
