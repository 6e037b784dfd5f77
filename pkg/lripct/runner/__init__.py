from __future__ import annotations

import os

from lripct.constants import THREADS_ENV
from lripct.runner.abstract_runner import AbstractRunner
from lripct.runner.dataclasses import Cell, CellResult, StatusType
from lripct.runner.serial_runner import SerialRunner
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def resolve_n_workers(n_workers: int | None = None) -> int:
    """Number of workers: ``n_workers`` if given, else the ``LRIPCT_THREADS`` environment variable, else 1."""
    if n_workers is None:
        raw = os.environ.get(THREADS_ENV)
        if raw is None or raw.strip() == "":
            return 1

        try:
            n_workers = int(raw)
        except ValueError:
            raise InvalidArgumentError(f"{THREADS_ENV} must be a positive integer, got {raw!r}.")

    if n_workers < 1:
        raise InvalidArgumentError(f"The number of workers must be a positive integer, got {n_workers}.")

    return n_workers


def make_runner(n_workers: int | None = None) -> AbstractRunner:
    """Serial runner for one worker, a local dask cluster otherwise."""
    n_workers = resolve_n_workers(n_workers)
    if n_workers == 1:
        return SerialRunner()

    from lripct.runner.dask_runner import DaskParallelRunner

    return DaskParallelRunner(SerialRunner(), n_workers=n_workers)


__all__ = [
    "AbstractRunner",
    "SerialRunner",
    "Cell",
    "CellResult",
    "StatusType",
    "make_runner",
    "resolve_n_workers",
]
