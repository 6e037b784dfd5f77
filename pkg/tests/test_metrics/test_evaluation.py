from __future__ import annotations

import json

import numpy as np
import pandas as pd
import pytest

from lripct.metrics import EVALUATION_COLUMNS, evaluate, psnr, ssim, write_evaluations_csv

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def test_evaluate():
    rng = np.random.default_rng(0)
    ref = rng.random((16, 16))
    img = ref + 0.01 * rng.standard_normal((16, 16))

    row = evaluate("noisy", img, ref)
    assert row.name == "noisy"
    assert row.psnr == pytest.approx(psnr(img, ref))
    assert row.ssim == pytest.approx(ssim(img, ref))
    assert row.rmse == pytest.approx(0.01, rel=0.2)


def test_write_evaluations_csv(tmp_path):
    ref = np.zeros((12, 12))
    rows = [evaluate("same", ref, ref), evaluate("ones", np.ones((12, 12)), ref)]

    path = tmp_path / "metrics.csv"
    write_evaluations_csv(rows, path)

    text = path.read_text()
    assert text.splitlines()[0] == ",".join(EVALUATION_COLUMNS)
    assert "\r" not in text

    df = pd.read_csv(path)
    assert list(df["name"]) == ["same", "ones"]
    assert df["rmse"].tolist() == [0.0, 1.0]
    assert np.isinf(df["psnr"][0])

    meta = json.loads((tmp_path / "metrics.csv.meta.json").read_text())
    assert meta["file"] == "metrics.csv"
    assert "joint" in meta["joint_score"]
