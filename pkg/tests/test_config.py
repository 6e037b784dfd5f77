from __future__ import annotations

import pytest

from lripct.config import parse_config, read_config, write_config
from lripct.geometry import default_geometry
from lripct.utils.exceptions import InvalidArgumentError
from lripct.variational import SolverParams

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def test_parse_config():
    text = "# comment\n\nsolver.mu = 0.5  # trailing\ngeometry.angular_range_deg=120\n"
    assert parse_config(text) == {"solver.mu": ("0.5", 3), "geometry.angular_range_deg": ("120", 4)}


@pytest.mark.parametrize(
    "text, line",
    [
        ("solver.mu 0.5", 1),
        ("\nmu = 0.5", 2),
        ("output.path = x", 1),
        ("solver.mu = 1\nsolver.mu = 2", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(InvalidArgumentError, match=f"Line {line}"):
        parse_config(text)


def test_read_solver_keys(tmp_path):
    path = tmp_path / "params.cfg"
    path.write_text("solver.mu = 0.25\nsolver.outer_iters = 12\nsolver.nonneg = yes\n")

    geometry, params = read_config(path)
    assert geometry is None
    assert params == SolverParams(mu=0.25, outer_iters=12, nonneg=True)


def test_read_geometry_keys(tmp_path):
    path = tmp_path / "geom.cfg"
    path.write_text("geometry.angular_range_deg = 90\n")

    geometry, params = read_config(path, default_geometry(16))
    assert geometry is not None
    assert geometry.angular_range_deg == 90
    assert geometry.n_views == 90
    assert params == SolverParams()


@pytest.mark.parametrize(
    "text, line",
    [
        ("solver.unknown = 1", 1),
        ("\nsolver.outer_iters = 2.5", 2),
        ("solver.nonneg = maybe", 1),
        ("geometry.n_pixels = 3", 1),
    ],
)
def test_read_errors(tmp_path, text, line):
    path = tmp_path / "bad.cfg"
    path.write_text(text)

    with pytest.raises(InvalidArgumentError, match=f"Line {line}"):
        read_config(path, default_geometry(16))


def test_geometry_keys_need_a_geometry(tmp_path):
    path = tmp_path / "geom.cfg"
    path.write_text("geometry.n = 32\n")

    with pytest.raises(InvalidArgumentError, match="base geometry"):
        read_config(path)


def test_invalid_values_are_rejected(tmp_path):
    path = tmp_path / "steps.cfg"
    path.write_text("solver.tau_step = 2\nsolver.sigma_step = 1\n")

    with pytest.raises(InvalidArgumentError):
        read_config(path)


def test_write_and_read(tmp_path):
    geometry = default_geometry(24, 150)
    params = SolverParams(lambda_tv=0.3, inner_tv_iters=7, nonneg=True)

    path = tmp_path / "all.cfg"
    write_config(path, geometry, params)

    assert read_config(path, default_geometry(16)) == (geometry, params)
