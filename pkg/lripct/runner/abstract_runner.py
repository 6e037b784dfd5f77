from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Iterator

import time
import traceback

from lripct.runner.dataclasses import Cell, CellResult, StatusType
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


class AbstractRunner(ABC):
    """Interface class to handle the execution of experiment cells.

    Launching a cell follows a submit/collect scheme:

    1. A cell is launched via ``submit_cell()``, which internally calls ``run_wrapper()``.
    2. Completed cells are collected via ``iter_results()``, which consumes any finished cells.
    3. ``wait()`` blocks until at least one pending cell finished.

    ``run_cells()`` drives the scheme for a whole grid and returns the results ordered by cell index, so the output
    does not depend on the order in which workers finish.
    """

    def __init__(self) -> None:
        # Finished cells are put in this FIFO list and collected via `iter_results`
        self._results_queue: list[CellResult] = []

    @property
    def meta(self) -> dict[str, Any]:
        """Returns the meta-data of the created object."""
        return {"name": self.__class__.__name__}

    def run_wrapper(self, cell: Cell) -> CellResult:
        """Runs a cell and captures crashes instead of raising them.

        Parameters
        ----------
        cell : Cell

        Returns
        -------
        result : CellResult
        """
        start = time.time()
        try:
            values = cell.function(**cell.kwargs)
            status = StatusType.SUCCESS
            additional_info: dict[str, Any] = {}
        except Exception as e:
            values = {}
            status = StatusType.CRASHED
            additional_info = {
                "traceback": traceback.format_exc(),
                "error": repr(e),
            }

        return CellResult(
            index=cell.index,
            key=cell.key,
            values=values,
            status=status,
            time=time.time() - start,
            additional_info=additional_info,
        )

    def run_cells(self, cells: list[Cell]) -> list[CellResult]:
        """Runs all cells and returns their results ordered by ``Cell.index``."""
        results: list[CellResult] = []
        for cell in cells:
            while self.count_available_workers() <= 0:
                self.wait()
                results += list(self.iter_results())

            logger.debug(f"Submitting cell {cell.index} {cell.key}.")
            self.submit_cell(cell)
            results += list(self.iter_results())

        while self.is_running():
            self.wait()
            results += list(self.iter_results())

        results += list(self.iter_results())

        for result in results:
            if result.status == StatusType.CRASHED:
                logger.error(f"Cell {result.key} crashed: {result.additional_info['error']}")
                logger.debug(result.additional_info["traceback"])

        return sorted(results, key=lambda result: result.index)

    @abstractmethod
    def submit_cell(self, cell: Cell) -> None:
        """Submits a cell to one of the workers. The result eventually appears in ``self._results_queue``."""
        raise NotImplementedError

    @abstractmethod
    def iter_results(self) -> Iterator[CellResult]:
        """Returns any finished cells and removes them from the queue."""
        raise NotImplementedError

    @abstractmethod
    def wait(self) -> None:
        """Blocks until at least one pending cell finished."""
        raise NotImplementedError

    @abstractmethod
    def is_running(self) -> bool:
        """Whether there are cells still running."""
        raise NotImplementedError

    @abstractmethod
    def count_available_workers(self) -> int:
        """Returns the number of available workers."""
        raise NotImplementedError

    def close(self) -> None:
        """Releases resources held by the runner."""
        pass
