from __future__ import annotations

import logging
import logging.config
from pathlib import Path

import yaml
from typing_extensions import Literal

import lripct

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

# Loggers of the iterative solvers; their per-iteration debug lines are only shown when asked for
SOLVER_LOGGERS = ("lripct.variational", "lripct.reconstruction")

RUN_LOG_FORMAT = "%(asctime)s [%(levelname)s][%(name)s] %(message)s"


def _resolve_level(level: int | str) -> int:
    if isinstance(level, str):
        resolved = logging.getLevelName(level.upper())
        if not isinstance(resolved, int):
            raise ValueError(f"Unknown logging level {level!r}.")

        return resolved

    return level


def setup_logging(
    level: int | str | Path | Literal[False] | None = False,
    solver_level: int | str | None = None,
) -> None:
    """Sets up the logging configuration for all modules.

    Parameters
    ----------
    level : int | str | Path | Literal[False] | None, defaults to False
        A logging level (``20`` or ``"info"``) applied to the packaged ``logging.yml``. A custom configuration
        file is used when passing a path. If False, no logging setup is performed.
    solver_level : int | str | None, defaults to None
        Level of the solver loggers. Defaults to ``level`` when that is DEBUG, otherwise INFO, so iteration
        traces only appear in verbose runs.
    """
    if level is False:
        return

    if isinstance(level, Path):
        log_filename = level
    else:
        log_filename = Path(lripct.__file__).parent / "logging.yml"

    with log_filename.open("r") as stream:
        config = yaml.safe_load(stream)

    if level is not None and not isinstance(level, Path):
        numeric = _resolve_level(level)
        config["root"]["level"] = numeric
        config["handlers"]["console"]["level"] = numeric

        if solver_level is None:
            solver_level = logging.DEBUG if numeric <= logging.DEBUG else logging.INFO

    logging.config.dictConfig(config)

    if solver_level is not None:
        for name in SOLVER_LOGGERS:
            logging.getLogger(name).setLevel(_resolve_level(solver_level))


def add_run_log(directory: Path, level: int = logging.INFO) -> logging.FileHandler:
    """Mirrors all lripct records into ``directory / lripct.log`` next to the tables of an experiment run.

    Returns
    -------
    handler : logging.FileHandler
        Pass it to ``remove_run_log`` when the run is done.
    """
    directory.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(directory / "lripct.log", mode="a", encoding="utf-8")
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(RUN_LOG_FORMAT))
    logging.getLogger("lripct").addHandler(handler)

    return handler


def remove_run_log(handler: logging.Handler) -> None:
    """Detaches and closes a handler created by ``add_run_log``."""
    logging.getLogger("lripct").removeHandler(handler)
    handler.close()


def get_logger(logger_name: str) -> logging.Logger:
    """Get the logger by name."""
    return logging.getLogger(logger_name)
