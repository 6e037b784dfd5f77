from __future__ import annotations

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


class LripctError(Exception):
    """Base class of all errors raised by lripct."""

    pass


class InvalidArgumentError(LripctError, ValueError):
    """An argument violates a documented precondition (shape, range, or unknown option)."""

    pass


class ResourceLimitError(LripctError, MemoryError):
    """An explicit matrix would exceed the configured entry budget."""

    pass


class DegenerateInputError(LripctError, ArithmeticError):
    """The input has no meaningful answer, e.g. the pseudoinverse of a zero matrix."""

    pass


class NumericalDivergenceError(LripctError, ArithmeticError):
    """An iterative solver produced non-finite values.

    Parameters
    ----------
    message : str
    iteration : int
        Index of the iteration in which the first non-finite value appeared.
    """

    def __init__(self, message: str, iteration: int):
        super().__init__(message)
        self.iteration = iteration


class FormatError(LripctError, ValueError):
    """A file does not follow the expected binary layout.

    Parameters
    ----------
    message : str
    offset : int
        Byte offset at which reading failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset
