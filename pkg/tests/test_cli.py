from __future__ import annotations

import json

import numpy as np
import pandas as pd
import pytest

from lripct.cli import EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, build_parser, infer_default_size, main
from lripct.geometry import Sinogram
from lripct.io import read_image, read_sinogram

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


@pytest.fixture
def phantom_file(tmp_path):
    path = tmp_path / "phantom.lrip"
    assert main(["--quiet", "phantom", "--size", "16", "--out", str(path)]) == EXIT_OK
    return path


def test_metrics_of_identical_files(capsys, phantom_file):
    assert main(["metrics", "--ref", str(phantom_file), "--test", str(phantom_file)]) == EXIT_OK

    out = capsys.readouterr().out.strip().splitlines()
    assert out[-1] == "psnr=inf rmse=0 ssim=1 joint=0"


def test_pipeline(tmp_path, capsys, phantom_file):
    sino = tmp_path / "sino.lrip"
    noisy = tmp_path / "noisy.lrip"
    params = tmp_path / "params.cfg"
    params.write_text("solver.outer_iters = 5\nsolver.inner_tv_iters = 5\n")

    assert main(["--quiet", "project", "--phantom", str(phantom_file), "--coverage", "120", "--out", str(sino)]) == 0
    assert read_sinogram(sino).shape == (120, 24)

    argv = ["--quiet", "noise", "--in", str(sino), "--kind", "gaussian", "--level", "0.05", "--out", str(noisy)]
    assert main(argv) == EXIT_OK
    assert json.loads((tmp_path / "noisy.lrip.meta.json").read_text())["noise"]["kind"] == "gaussian"

    for method in ("fbp", "tv", "pd", "lrip"):
        out = tmp_path / f"{method}.lrip"
        argv = ["--quiet", "recon", "--method", method, "--sino", str(noisy), "--params", str(params)]
        argv += ["--out", str(out)]
        assert main(argv) == EXIT_OK
        assert read_image(out).shape == (16, 16)
        assert (tmp_path / f"{method}.lrip.meta.json").exists()

    log = tmp_path / "log.csv"
    pgm = tmp_path / "lrip.pgm"
    argv = [
        "--quiet", "recon", "--method", "lrip", "--sino", str(noisy), "--params", str(params),
        "--ref", str(phantom_file), "--log", str(log), "--pgm", str(pgm), "--out", str(tmp_path / "lrip2.lrip"),
    ]  # fmt: skip
    assert main(argv) == EXIT_OK
    assert len(pd.read_csv(log)) == 5
    assert pgm.read_bytes().startswith(b"P5\n16 16\n255\n")

    prior = tmp_path / "prior.lrip"
    argv = ["--quiet", "prior", "--sino", str(noisy), "--tau", "4", "--method", "fbp", "--out", str(prior)]
    assert main(argv) == EXIT_OK
    assert read_image(prior).shape == (4, 4)

    csv = tmp_path / "metrics.csv"
    argv = ["metrics", "--ref", str(phantom_file), "--test", str(tmp_path / "lrip.lrip"), "--csv", str(csv)]
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out.strip().splitlines()[-1].startswith("psnr=")
    assert pd.read_csv(csv)["name"].tolist() == ["lrip.lrip"]


def test_cond(tmp_path):
    out = tmp_path / "cond.csv"
    argv = ["--quiet", "cond", "--size", "8", "--coverages", "60,30", "--taus", "2", "--workers", "1"]
    argv += ["--out", str(out)]
    assert main(argv) == EXIT_OK

    df = pd.read_csv(out, dtype={"holds": str})
    assert list(df.columns) == ["coverage_deg", "tau", "norm", "cond_full", "cond_low", "holds"]
    assert df["coverage_deg"].tolist() == [60.0, 30.0]
    assert set(df["holds"]) <= {"true", "false"}
    assert (df["cond_full"] >= 1).all()


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["unknown"],
        ["recon", "--method", "lrip"],
        ["recon", "--method", "art", "--sino", "x", "--out", "y"],
        ["phantom", "--size", "sixteen", "--out", "x"],
        ["phantom", "--size", "16", "--type", "disk", "--disks", "0,0,0.5", "--out", "x"],
        ["--verbose", "--quiet", "metrics", "--ref", "a", "--test", "b"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("[lripct.cli]")


def test_missing_file(tmp_path, capsys):
    missing = str(tmp_path / "missing.lrip")
    assert main(["--quiet", "metrics", "--ref", missing, "--test", missing]) == EXIT_RUNTIME
    assert capsys.readouterr().err.startswith("[lripct.io.arrays]")


def test_invalid_argument(tmp_path, capsys):
    out = str(tmp_path / "x.lrip")
    assert main(["--quiet", "phantom", "--size", "8", "--out", out]) == EXIT_RUNTIME
    assert capsys.readouterr().err.startswith("[lripct.simulation.phantoms]")


def test_mismatched_sinogram(tmp_path, phantom_file, capsys):
    sino = tmp_path / "sino.lrip"
    assert main(["--quiet", "project", "--phantom", str(phantom_file), "--coverage", "90", "--out", str(sino)]) == 0

    argv = ["--quiet", "recon", "--method", "fbp", "--sino", str(sino), "--coverage", "120"]
    argv += ["--out", str(tmp_path / "x.lrip")]
    assert main(argv) == EXIT_RUNTIME
    assert "does not match" in capsys.readouterr().err


def test_disk_phantom(tmp_path):
    out = tmp_path / "disks.lrip"
    argv = ["--quiet", "phantom", "--type", "disk", "--size", "16", "--disks", "0,0,0.5,1;0.5,0.5,0.2,0.5"]
    argv += ["--out", str(out)]
    assert main(argv) == EXIT_OK
    assert read_image(out).values.max() == pytest.approx(1.0)


def test_infer_default_size():
    assert infer_default_size(Sinogram(np.zeros((120, 24)))) == 16
    assert infer_default_size(Sinogram(np.zeros((90, 96)))) == 64


def test_parser_has_every_command():
    parser = build_parser()
    for command in ("phantom", "project", "noise", "recon", "prior", "cond", "metrics", "repro", "tune"):
        assert parser.parse_args(_minimal(command)).command == command


def _minimal(command: str) -> list[str]:
    return {
        "phantom": ["phantom", "--size", "16", "--out", "x"],
        "project": ["project", "--phantom", "p", "--coverage", "90", "--out", "x"],
        "noise": ["noise", "--in", "s", "--kind", "poisson", "--level", "100", "--out", "x"],
        "recon": ["recon", "--method", "tv", "--sino", "s", "--out", "x"],
        "prior": ["prior", "--sino", "s", "--tau", "2", "--out", "x"],
        "cond": ["cond", "--size", "8", "--coverages", "30", "--taus", "2", "--out", "x"],
        "metrics": ["metrics", "--ref", "a", "--test", "b"],
        "repro": ["repro", "table3", "--out", "x"],
        "tune": ["tune", "--sino", "s", "--ref", "r", "--out", "x"],
    }[command]


def test_repro_factors():
    parser = build_parser()

    assert parser.parse_args(["repro", "table3", "--out", "x"]).taus == [2]
    assert parser.parse_args(["repro", "table3", "--taus", "2,4", "--out", "x"]).taus == [2, 4]
