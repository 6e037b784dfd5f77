from __future__ import annotations

from typing import Callable

from pathlib import Path

import pytest

from lripct.scenario import ExperimentScenario
from lripct.variational import SolverParams


@pytest.fixture
def make_scenario(tmp_path: Path) -> Callable:
    def _make(
        name: str = "table3",
        size: int = 16,
        coverages: tuple[float, ...] = (120.0,),
        noises: tuple[str, ...] = ("gaussian-5",),
        taus: tuple[int, ...] = (2,),
        outer_iters: int = 10,
        n_workers: int = 1,
    ) -> ExperimentScenario:
        return ExperimentScenario(
            name=name,
            output_directory=tmp_path / "lripct_output_test",
            seed=0,
            n_workers=n_workers,
            size=size,
            coverages=coverages,
            noises=noises,
            taus=taus,
            params=SolverParams(outer_iters=outer_iters, inner_tv_iters=5),
        )

    return _make
