from __future__ import annotations

from typing import Iterator

from lripct.runner.abstract_runner import AbstractRunner
from lripct.runner.dataclasses import Cell, CellResult

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


class SerialRunner(AbstractRunner):
    """Runs every cell in the calling process as soon as it is submitted."""

    def submit_cell(self, cell: Cell) -> None:
        """Runs ``cell`` immediately; its result is available right after."""
        self._results_queue.append(self.run_wrapper(cell))

    def iter_results(self) -> Iterator[CellResult]:  # noqa: D102
        while self._results_queue:
            yield self._results_queue.pop(0)

    def wait(self) -> None:
        """There is no need to wait in serial runners."""
        return

    def is_running(self) -> bool:  # noqa: D102
        return False

    def count_available_workers(self) -> int:
        """Serial runners only have one worker."""
        return 1
