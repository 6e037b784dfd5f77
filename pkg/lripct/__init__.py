import datetime
import traceback

name = "lripct"
package_name = "lripct"
author = "The lripct developers"

author_email = "lripct-dev@users.noreply.github.com"
description = "lripct, limited-angle CT reconstruction with low-resolution image priors."
url = "https://github.com/lripct/lripct"
project_urls = {
    "Documentation": "https://github.com/lripct/lripct#readme",
    "Source Code": "https://github.com/lripct/lripct",
}
copyright = f"""
    Copyright {datetime.date.today().strftime('%Y')}, The lripct developers"""
version = "0.3.0"


try:
    from lripct.geometry import Image, ScanGeometry, Sinogram, default_geometry
    from lripct.operators import DownSampler, back_project, forward_project
    from lripct.reconstruction import fbp
    from lripct.variational import SolverParams, lrip_reconstruct, tv_reconstruct

    __all__ = [
        "Image",
        "Sinogram",
        "ScanGeometry",
        "default_geometry",
        "DownSampler",
        "forward_project",
        "back_project",
        "fbp",
        "SolverParams",
        "tv_reconstruct",
        "lrip_reconstruct",
    ]
except ModuleNotFoundError as e:
    print(e)
    traceback.print_exc()
