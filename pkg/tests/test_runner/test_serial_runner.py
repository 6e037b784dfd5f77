from __future__ import annotations

import json

import pytest

from lripct.runner import Cell, SerialRunner, StatusType, make_runner, resolve_n_workers
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def square(x: float) -> dict[str, float]:
    return {"y": x**2}


def failing(x: float) -> dict[str, float]:
    raise RuntimeError(f"Failed on {x}.")


def test_run_cells():
    runner = SerialRunner()
    cells = [Cell(index=i, key=(i,), function=square, kwargs={"x": i}) for i in range(4)]

    results = runner.run_cells(cells)

    assert [r.index for r in results] == [0, 1, 2, 3]
    assert [r.values["y"] for r in results] == [0, 1, 4, 9]
    assert all(r.status == StatusType.SUCCESS for r in results)
    assert all(r.time >= 0 for r in results)
    assert not runner.is_running()


def test_results_are_ordered_by_index():
    cells = [Cell(index=i, key=(i,), function=square, kwargs={"x": i}) for i in (2, 0, 1)]
    results = SerialRunner().run_cells(cells)

    assert [r.index for r in results] == [0, 1, 2]


def test_crash_is_captured():
    cells = [
        Cell(index=0, key=("ok",), function=square, kwargs={"x": 3}),
        Cell(index=1, key=("bad",), function=failing, kwargs={"x": 3}),
        Cell(index=2, key=("parse",), function=json.loads, kwargs={"s": "{"}),
    ]
    results = SerialRunner().run_cells(cells)

    assert results[0].status == StatusType.SUCCESS
    assert results[1].status == StatusType.CRASHED
    assert results[1].values == {}
    assert "Failed on 3." in results[1].additional_info["error"]
    assert "Traceback" in results[1].additional_info["traceback"]
    assert results[2].status == StatusType.CRASHED


def test_run_wrapper():
    result = SerialRunner().run_wrapper(Cell(index=5, key=("a", 1), function=json.loads, kwargs={"s": '{"v": 1}'}))

    assert result.index == 5
    assert result.key == ("a", 1)
    assert result.values == {"v": 1}


def test_resolve_n_workers(monkeypatch):
    monkeypatch.delenv("LRIPCT_THREADS", raising=False)
    assert resolve_n_workers() == 1
    assert resolve_n_workers(3) == 3

    monkeypatch.setenv("LRIPCT_THREADS", "4")
    assert resolve_n_workers() == 4
    assert resolve_n_workers(2) == 2

    monkeypatch.setenv("LRIPCT_THREADS", " ")
    assert resolve_n_workers() == 1


@pytest.mark.parametrize("env, n_workers", [("four", None), ("0", None), (None, 0), (None, -2)])
def test_resolve_n_workers_invalid(monkeypatch, env, n_workers):
    if env is None:
        monkeypatch.delenv("LRIPCT_THREADS", raising=False)
    else:
        monkeypatch.setenv("LRIPCT_THREADS", env)

    with pytest.raises(InvalidArgumentError):
        resolve_n_workers(n_workers)


def test_make_runner_serial(monkeypatch):
    monkeypatch.delenv("LRIPCT_THREADS", raising=False)
    runner = make_runner()

    assert isinstance(runner, SerialRunner)
    assert runner.meta == {"name": "SerialRunner"}
    assert runner.count_available_workers() == 1
