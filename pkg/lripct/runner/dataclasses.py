from __future__ import annotations

from typing import Any, Callable

from dataclasses import dataclass, field
from enum import IntEnum

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


class StatusType(IntEnum):
    """Status of an experiment cell."""

    RUNNING = 0  # In case a cell was submitted, but it has not finished.
    SUCCESS = 1
    CRASHED = 2


@dataclass(frozen=True)
class Cell:
    """One independent unit of an experiment grid.

    Parameters
    ----------
    index : int
        Position of the cell in the grid. Results are emitted in this order.
    key : tuple
        Human-readable coordinates of the cell, e.g. ``(coverage, tau)``.
    function : Callable[..., dict[str, Any]]
        Module-level function (picklable) returning the cell's values.
    kwargs : dict[str, Any], defaults to {}
    """

    index: int
    key: tuple
    function: Callable[..., dict[str, Any]]
    kwargs: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CellResult:
    """Outcome of a cell.

    Parameters
    ----------
    index : int
    key : tuple
    values : dict[str, Any]
        Values returned by the cell function. Empty if the cell crashed.
    status : StatusType, defaults to StatusType.SUCCESS
    time : float, defaults to 0.0
        Wall time in seconds.
    additional_info : dict[str, Any], defaults to {}
        Error message and traceback of crashed cells.
    """

    index: int
    key: tuple
    values: dict[str, Any]
    status: StatusType = StatusType.SUCCESS
    time: float = 0.0
    additional_info: dict[str, Any] = field(default_factory=dict)
