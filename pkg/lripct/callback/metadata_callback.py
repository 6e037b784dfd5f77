from __future__ import annotations

from typing import Any

from pathlib import Path

from lripct.callback.callback import Callback
from lripct.io.tables import write_meta

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


class MetadataCallback(Callback):
    """Writes the provenance sidecar of an output file when a solver starts.

    Parameters
    ----------
    path : Path
        The output file; the sidecar is ``<path>.meta.json``.
    **kwargs
        Additional information. Arguments must be json serializable.
    """

    def __init__(self, path: Path | str, **kwargs: Any) -> None:
        super().__init__()
        self._path = Path(path)
        self.kwargs = kwargs

    def on_start(self, solver: str, state: Any) -> None:  # noqa: D102
        self._path.parent.mkdir(parents=True, exist_ok=True)
        write_meta(self._path, solver=solver, **self.kwargs)
