from __future__ import annotations

import json

import pytest

from lripct.runner import Cell, StatusType, make_runner
from lripct.runner.dask_runner import DaskParallelRunner

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def make_cells(n: int) -> list[Cell]:
    # json.loads is importable on every worker and takes keyword arguments
    return [Cell(index=i, key=(i,), function=json.loads, kwargs={"s": json.dumps({"v": i})}) for i in range(n)]


@pytest.mark.slow
def test_run_cells():
    runner = make_runner(2)
    assert isinstance(runner, DaskParallelRunner)

    try:
        results = runner.run_cells(make_cells(6))
    finally:
        runner.close()

    assert [r.index for r in results] == list(range(6))
    assert [r.values["v"] for r in results] == list(range(6))
    assert all(r.status == StatusType.SUCCESS for r in results)


@pytest.mark.slow
def test_crash_is_captured():
    runner = make_runner(2)
    cells = make_cells(2) + [Cell(index=2, key=("bad",), function=json.loads, kwargs={"s": "{"})]

    try:
        results = runner.run_cells(cells)
    finally:
        runner.close()

    assert [r.status for r in results] == [StatusType.SUCCESS, StatusType.SUCCESS, StatusType.CRASHED]
    assert "JSONDecodeError" in results[2].additional_info["error"]
    assert not runner.is_running()
