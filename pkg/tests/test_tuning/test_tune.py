from __future__ import annotations

import numpy as np
import pytest

from lripct.tuning import SobolDesign, TUNING_COLUMNS, tune_tv, tv_search_space
from lripct.tuning.search_space import LAMBDA_RANGE, SIGMA_RANGE, TAU_RANGE
from lripct.utils.exceptions import InvalidArgumentError
from lripct.variational import SolverParams

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def test_search_space():
    cs = tv_search_space()
    assert sorted(cs.keys()) == ["lambda_tv", "sigma_step", "tau_step"]

    default = dict(cs.get_default_configuration())
    assert default == pytest.approx({"lambda_tv": 1.0, "tau_step": 0.9, "sigma_step": 0.5})


def test_sobol_design():
    configs = SobolDesign(tv_search_space(), 8, seed=3).select_configurations()

    assert len(configs) == 8
    assert len({tuple(config.values()) for config in configs}) == 8
    for config in configs:
        assert LAMBDA_RANGE[0] <= config["lambda_tv"] <= LAMBDA_RANGE[1]
        assert TAU_RANGE[0] <= config["tau_step"] <= TAU_RANGE[1]
        assert SIGMA_RANGE[0] <= config["sigma_step"] <= SIGMA_RANGE[1]
        assert config.origin == "Sobol design"


def test_sobol_design_is_deterministic():
    first = SobolDesign(tv_search_space(), 5, seed=1).select_configurations()
    second = SobolDesign(tv_search_space(), 5, seed=1).select_configurations()
    other = SobolDesign(tv_search_space(), 5, seed=2).select_configurations()

    assert [dict(c) for c in first] == [dict(c) for c in second]
    assert [dict(c) for c in first] != [dict(c) for c in other]


def test_sobol_design_invalid():
    with pytest.raises(InvalidArgumentError):
        SobolDesign(tv_search_space(), 0)


def test_tune_tv(make_geometry, make_phantom, make_sinogram):
    geom = make_geometry(16, 120)
    phantom = make_phantom(16)
    sino = make_sinogram(phantom, geom)
    base = SolverParams(outer_iters=8, inner_tv_iters=5, nonneg=True)

    result = tune_tv(sino, geom, phantom, n_configs=4, seed=0, base_params=base)

    assert len(result.rows) == 4
    assert all(list(row) == TUNING_COLUMNS for row in result.rows)

    psnrs = [row["psnr"] for row in result.rows]
    best = result.rows[int(np.argmax(psnrs))]
    assert result.best.lambda_tv == best["lambda_tv"]
    assert result.best.tau_step == best["tau_step"]
    assert result.best.outer_iters == 8
    assert result.best.nonneg

    again = tune_tv(sino, geom, phantom, n_configs=4, seed=0, base_params=base)
    assert again.rows == result.rows
