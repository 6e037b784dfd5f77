from lripct.geometry.raster import Image, Sinogram
from lripct.geometry.scan_geometry import (
    ScanGeometry,
    count_views,
    default_geometry,
    view_angles,
)

__all__ = [
    "Image",
    "Sinogram",
    "ScanGeometry",
    "count_views",
    "default_geometry",
    "view_angles",
]
