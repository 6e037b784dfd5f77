from lripct.io.arrays import read_array, read_image, read_sinogram, write_array
from lripct.io.pgm import export_pgm, to_gray_levels
from lripct.io.tables import write_meta, write_table

__all__ = [
    "write_array",
    "read_array",
    "read_image",
    "read_sinogram",
    "export_pgm",
    "to_gray_levels",
    "write_table",
    "write_meta",
]
