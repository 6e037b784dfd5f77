from lripct.metrics.evaluation import (
    EVALUATION_COLUMNS,
    Evaluation,
    evaluate,
    write_evaluations_csv,
)
from lripct.metrics.image_metrics import (
    joint_score,
    mse,
    psnr,
    residual,
    rmse,
    ssim,
    ssim_map,
)

__all__ = [
    "mse",
    "rmse",
    "psnr",
    "ssim",
    "ssim_map",
    "joint_score",
    "residual",
    "Evaluation",
    "evaluate",
    "write_evaluations_csv",
    "EVALUATION_COLUMNS",
]
