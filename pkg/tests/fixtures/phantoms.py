from __future__ import annotations

from typing import Callable

import pytest

from lripct.geometry import Image, ScanGeometry, Sinogram
from lripct.operators import forward_project
from lripct.simulation import NoiseSpec, disk_phantom, shepp_logan


@pytest.fixture
def make_phantom() -> Callable:
    def _make(n: int = 16, kind: str = "shepp-logan") -> Image:
        if kind == "shepp-logan":
            return shepp_logan(n)

        return disk_phantom(n, [(0.0, 0.0, 0.5, 1.0)])

    return _make


@pytest.fixture
def make_sinogram() -> Callable:
    def _make(img: Image, geom: ScanGeometry, noise: NoiseSpec | None = None) -> Sinogram:
        sino = forward_project(img, geom)
        if noise is not None:
            sino = noise.apply(sino)

        return sino

    return _make
