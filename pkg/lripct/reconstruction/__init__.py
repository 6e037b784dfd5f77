from lripct.reconstruction.fbp import FILTER_KINDS, fbp, filter_views, ramp_kernel

__all__ = ["fbp", "filter_views", "ramp_kernel", "FILTER_KINDS"]
