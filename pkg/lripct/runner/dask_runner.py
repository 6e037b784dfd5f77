from __future__ import annotations

from typing import Iterator

import time

import dask
from dask.distributed import Client, Future, wait

from lripct.runner.abstract_runner import AbstractRunner
from lripct.runner.dataclasses import Cell, CellResult
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)


class DaskParallelRunner(AbstractRunner):
    """Submits cells to a dask cluster. Wraps a serial runner whose ``run_wrapper`` is executed by the workers.

    Parameters
    ----------
    single_worker : AbstractRunner
        A runner that is executed on each of the ``n_workers``.
    n_workers : int
        Number of worker processes of the local cluster.
    patience : int, defaults to 5
        How much to wait for workers (seconds) to be available if one fails.
    dask_client : Client | None, defaults to None
        User-created dask client. It is not closed automatically. If none is provided, a local one is created and
        closed upon completion.
    """

    def __init__(
        self,
        single_worker: AbstractRunner,
        n_workers: int,
        patience: int = 5,
        dask_client: Client | None = None,
    ):
        super().__init__()
        self._single_worker = single_worker
        self._pending_cells: list[Future] = []
        self._patience = patience

        self._client: Client
        self._close_client_at_del: bool

        if dask_client is None:
            dask.config.set({"distributed.worker.daemon": False})
            self._close_client_at_del = True
            self._client = Client(
                n_workers=n_workers,
                processes=True,
                threads_per_worker=1,
            )
        else:
            self._client = dask_client
            self._close_client_at_del = False

    def submit_cell(self, cell: Cell) -> None:
        """Submits ``cell`` to a free worker, blocking until one is available."""
        if self.count_available_workers() <= 0:
            logger.debug("No worker available. Waiting for one to be available...")
            wait(self._pending_cells, return_when="FIRST_COMPLETED")
            self._process_pending_cells()

        if self.count_available_workers() <= 0:
            logger.warning("No workers are available. This could mean workers crashed. Waiting for new workers...")
            time.sleep(self._patience)
            if self.count_available_workers() <= 0:
                raise RuntimeError(
                    "Tried to execute a cell, but no worker was ever available. "
                    "This likely means that a worker crashed or no workers were properly configured."
                )

        future = self._client.submit(self._single_worker.run_wrapper, cell=cell, pure=False)
        self._pending_cells.append(future)

    def iter_results(self) -> Iterator[CellResult]:  # noqa: D102
        self._process_pending_cells()
        while self._results_queue:
            yield self._results_queue.pop(0)

    def wait(self) -> None:  # noqa: D102
        if self.is_running():
            wait(self._pending_cells, return_when="FIRST_COMPLETED")

    def is_running(self) -> bool:  # noqa: D102
        return len(self._pending_cells) > 0

    def count_available_workers(self) -> int:
        """Total number of worker threads minus the pending cells."""
        return sum(self._client.nthreads().values()) - len(self._pending_cells)

    def close(self, force: bool = False) -> None:
        """Closes the client."""
        if self._close_client_at_del or force:
            self._client.close()

    def _process_pending_cells(self) -> None:
        """Moves finished cells from ``self._pending_cells`` to ``self._results_queue``."""
        done = [future for future in self._pending_cells if future.done()]
        for future in done:
            self._results_queue.append(future.result())
            self._pending_cells.remove(future)

    def __del__(self) -> None:
        """Terminates the client if it was created by this runner."""
        if getattr(self, "_close_client_at_del", False):
            self.close()
