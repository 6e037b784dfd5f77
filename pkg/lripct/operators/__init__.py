from lripct.operators.downsampler import DownSampler, downsample, upsample_adjoint
from lripct.operators.projector import (
    back_project,
    backproject,
    forward_project,
    operator_norm,
    project,
)
from lripct.operators.system_matrix import (
    SystemMatrix,
    build_system_matrix,
    projection_matrix,
)

__all__ = [
    "DownSampler",
    "downsample",
    "upsample_adjoint",
    "forward_project",
    "back_project",
    "project",
    "backproject",
    "operator_norm",
    "SystemMatrix",
    "build_system_matrix",
    "projection_matrix",
]
