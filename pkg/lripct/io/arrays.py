from __future__ import annotations

from pathlib import Path

import numpy as np

from lripct.geometry import Image, Sinogram
from lripct.utils.exceptions import FormatError, InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

MAGIC = b"LRIP"
FORMAT_VERSION = 1
KIND_IMAGE = 0
KIND_SINOGRAM = 1

# Packed little-endian header: magic, version, kind, rows, cols
HEADER_DTYPE = np.dtype(
    [
        ("magic", "S4"),
        ("version", "<u4"),
        ("kind", "u1"),
        ("rows", "<u4"),
        ("cols", "<u4"),
    ]
)
VALUE_DTYPE = np.dtype("<f4")


def write_array(path: Path | str, array: Image | Sinogram) -> None:
    """Writes ``array`` in the binary ``LRIP`` format.

    The file holds a 17-byte header (magic ``LRIP``, format version, kind byte 0 for images and 1 for sinograms,
    rows, cols) followed by ``rows * cols`` binary32 values in row-major order. All fields are little-endian.

    Parameters
    ----------
    path : Path | str
    array : Image | Sinogram
    """
    if isinstance(array, Image):
        kind = KIND_IMAGE
    elif isinstance(array, Sinogram):
        kind = KIND_SINOGRAM
    else:
        raise InvalidArgumentError(f"Expected an Image or a Sinogram, got {type(array).__name__}.")

    values = array.values.astype(VALUE_DTYPE)
    if not np.all(np.isfinite(values)):
        raise InvalidArgumentError("Values overflow the binary32 range and cannot be stored.")

    header = np.array([(MAGIC, FORMAT_VERSION, kind, values.shape[0], values.shape[1])], dtype=HEADER_DTYPE)
    with open(path, "wb") as fh:
        fh.write(header.tobytes())
        fh.write(values.tobytes(order="C"))


def read_array(path: Path | str) -> Image | Sinogram:
    """Reads a file written by ``write_array``.

    Raises
    ------
    FormatError
        If the magic, version or kind are wrong, or if the file is truncated or has trailing bytes.
    """
    data = Path(path).read_bytes()

    if len(data) < HEADER_DTYPE.itemsize:
        raise FormatError(
            f"Truncated header: {HEADER_DTYPE.itemsize - len(data)} bytes missing",
            offset=len(data),
        )

    header = np.frombuffer(data, dtype=HEADER_DTYPE, count=1)[0]
    if header["magic"] != MAGIC:
        raise FormatError(f"Bad magic {bytes(header['magic'])!r}, expected {MAGIC!r}", offset=0)

    if int(header["version"]) != FORMAT_VERSION:
        raise FormatError(f"Unsupported format version {int(header['version'])}", offset=4)

    kind = int(header["kind"])
    if kind not in (KIND_IMAGE, KIND_SINOGRAM):
        raise FormatError(f"Unknown kind byte {kind}", offset=8)

    rows, cols = int(header["rows"]), int(header["cols"])
    if rows == 0 or cols == 0:
        raise FormatError(f"Empty {rows} x {cols} array", offset=9)

    expected = HEADER_DTYPE.itemsize + rows * cols * VALUE_DTYPE.itemsize
    if len(data) < expected:
        raise FormatError(f"Truncated values: {expected - len(data)} bytes missing", offset=len(data))

    if len(data) > expected:
        raise FormatError(f"{len(data) - expected} unexpected trailing bytes", offset=expected)

    values = np.frombuffer(data, dtype=VALUE_DTYPE, offset=HEADER_DTYPE.itemsize, count=rows * cols)
    values = values.reshape(rows, cols).astype(np.float64)

    if kind == KIND_IMAGE:
        return Image(values)

    return Sinogram(values)


def read_image(path: Path | str) -> Image:
    """Reads an array file and checks that it holds an image."""
    array = read_array(path)
    if not isinstance(array, Image):
        raise FormatError(f"{path} holds a sinogram, expected an image", offset=8)

    return array


def read_sinogram(path: Path | str) -> Sinogram:
    """Reads an array file and checks that it holds a sinogram."""
    array = read_array(path)
    if not isinstance(array, Sinogram):
        raise FormatError(f"{path} holds an image, expected a sinogram", offset=8)

    return array
