from __future__ import annotations

from pathlib import Path

import numpy as np

from lripct.geometry import Image
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def to_gray_levels(img: Image, window: tuple[float, float] = (0.0, 1.0)) -> np.ndarray:
    """Maps ``img`` to 8-bit gray levels: ``round(255 * clamp((v - lo) / (hi - lo), 0, 1))``, halves rounded up."""
    lo, hi = window
    if not lo < hi:
        raise InvalidArgumentError(f"The display window needs lo < hi, got ({lo}, {hi}).")

    scaled = np.clip((img.values - lo) / (hi - lo), 0.0, 1.0)
    return np.floor(255.0 * scaled + 0.5).astype(np.uint8)


def export_pgm(img: Image, path: Path | str, window: tuple[float, float] = (0.0, 1.0)) -> None:
    """Writes ``img`` as an 8-bit binary (P5) PGM file with the display ``window``."""
    levels = to_gray_levels(img, window)
    with open(path, "wb") as fh:
        fh.write(f"P5\n{img.n_cols} {img.n_rows}\n255\n".encode("ascii"))
        fh.write(levels.tobytes(order="C"))
