from __future__ import annotations

from typing import Iterable

from dataclasses import asdict, dataclass
from pathlib import Path

from lripct.io.tables import write_meta, write_table
from lripct.metrics.image_metrics import ImageLike, joint_score, psnr, rmse, ssim

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

EVALUATION_COLUMNS = ["name", "psnr", "rmse", "ssim", "joint"]

# Recorded in every sidecar of an evaluation table
JOINT_SCORE_NOTE = "joint = MSE + mu * (1 - SSIM) with mu = 1; lower is better"


@dataclass(frozen=True)
class Evaluation:
    """Quality of one image against a reference."""

    name: str
    psnr: float
    rmse: float
    ssim: float
    joint: float


def evaluate(name: str, img: ImageLike, ref: ImageLike, max_val: float = 1.0, mu: float = 1.0) -> Evaluation:
    """PSNR, RMSE, SSIM and joint score of ``img`` against ``ref``."""
    return Evaluation(
        name=name,
        psnr=psnr(img, ref, max_val),
        rmse=rmse(img, ref),
        ssim=ssim(img, ref),
        joint=joint_score(img, ref, mu),
    )


def write_evaluations_csv(rows: Iterable[Evaluation], path: Path | str) -> None:
    """Writes ``name,psnr,rmse,ssim,joint`` rows and their sidecar."""
    write_table([asdict(row) for row in rows], EVALUATION_COLUMNS, path)
    write_meta(path, joint_score=JOINT_SCORE_NOTE)
