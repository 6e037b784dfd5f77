from __future__ import annotations

from typing import Any

from pathlib import Path

from lripct.callback.callback import Callback
from lripct.io.tables import write_table
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)

DIAGNOSTICS_COLUMNS = ["iter", "objective", "data_residual", "psnr"]


class DiagnosticsCallback(Callback):
    """Collects the per-iteration diagnostics of a solver and optionally writes them as CSV.

    Parameters
    ----------
    path : Path | None, defaults to None
        Destination of the ``iter,objective,data_residual,psnr`` table, written when the solver ends.
    every : int, defaults to 1
        Only every ``every``-th iteration is recorded.
    """

    def __init__(self, path: Path | str | None = None, every: int = 1) -> None:
        super().__init__()
        self._path = None if path is None else Path(path)
        self._every = every
        self.rows: list[dict[str, float]] = []

    def on_start(self, solver: str, state: Any) -> None:  # noqa: D102
        self.rows = []
        logger.debug(f"Recording diagnostics of {solver}.")

    def on_iteration_end(self, k: int, state: Any, diagnostics: dict[str, float]) -> bool | None:  # noqa: D102
        if k % self._every == 0:
            self.rows.append({"iter": k, **diagnostics})

        return None

    def on_end(self, state: Any) -> None:  # noqa: D102
        if self._path is not None:
            write_table(self.rows, DIAGNOSTICS_COLUMNS, self._path)
            logger.info(f"Wrote {len(self.rows)} diagnostic rows to {self._path}.")
