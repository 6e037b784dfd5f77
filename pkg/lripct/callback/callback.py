from __future__ import annotations

from typing import Any

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


class Callback:
    """Callback interface with methods that are called at different stages of an iterative reconstruction.

    ``state`` is the solver's state object (``LripState`` or ``PrimalDualState``); its ``u`` attribute holds the
    current image iterate.
    """

    def __init__(self) -> None:
        pass

    def on_start(self, solver: str, state: Any) -> None:
        """Called before the first iteration."""
        pass

    def on_iteration_end(self, k: int, state: Any, diagnostics: dict[str, float]) -> bool | None:
        """Called after iteration ``k`` (1-based). Optionally, returns false to stop the solver early.

        ``diagnostics`` holds ``objective``, ``data_residual`` and ``psnr`` (NaN without a reference image).
        """
        pass

    def on_end(self, state: Any) -> None:
        """Called after the last iteration."""
        pass
