from __future__ import annotations

from typing import Any

from dataclasses import fields, replace
from pathlib import Path

from lripct.geometry import ScanGeometry, count_views
from lripct.utils.exceptions import InvalidArgumentError
from lripct.variational import SolverParams

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

_TRUE = ("true", "yes", "on", "1")
_FALSE = ("false", "no", "off", "0")


def _convert(raw: str, default: Any, key: str, line: int) -> Any:
    try:
        if isinstance(default, bool):
            lowered = raw.lower()
            if lowered not in _TRUE + _FALSE:
                raise ValueError(raw)

            return lowered in _TRUE

        if isinstance(default, int):
            return int(raw)

        return float(raw)
    except ValueError:
        raise InvalidArgumentError(f"Line {line}: `{key}` expects a {type(default).__name__}, got {raw!r}.")


def parse_config(text: str) -> dict[str, tuple[str, int]]:
    """Splits ``key = value`` lines into a flat dictionary ``key -> (value, line number)``.

    Blank lines and everything after ``#`` are ignored. Keys must live in the ``geometry`` or ``solver`` section.
    """
    entries: dict[str, tuple[str, int]] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if line == "":
            continue

        if "=" not in line:
            raise InvalidArgumentError(f"Line {number}: expected `key = value`, got {raw_line.strip()!r}.")

        key, value = (part.strip() for part in line.split("=", 1))
        section = key.split(".", 1)[0]
        if section not in ("geometry", "solver") or "." not in key:
            raise InvalidArgumentError(f"Line {number}: unknown key `{key}`.")

        if key in entries:
            raise InvalidArgumentError(f"Line {number}: `{key}` was already set in line {entries[key][1]}.")

        entries[key] = (value, number)

    return entries


def read_config(
    path: Path | str,
    geometry: ScanGeometry | None = None,
    params: SolverParams | None = None,
) -> tuple[ScanGeometry | None, SolverParams]:
    """Reads a config file and applies it on top of ``geometry`` and ``params``.

    ``geometry.*`` keys override fields of ``geometry`` (which is required if such keys are present);
    ``n_views`` follows a changed arc or angle step unless it is given explicitly. ``solver.*`` keys override
    ``params`` (defaults to ``SolverParams()``).

    Returns
    -------
    geometry : ScanGeometry | None
    params : SolverParams
    """
    entries = parse_config(Path(path).read_text())
    params = params or SolverParams()

    geometry_fields = {f.name for f in fields(ScanGeometry)}
    solver_fields = {f.name for f in fields(SolverParams)}

    geometry_changes: dict[str, Any] = {}
    solver_changes: dict[str, Any] = {}
    for key, (value, line) in entries.items():
        section, name = key.split(".", 1)
        if section == "geometry":
            if name not in geometry_fields:
                raise InvalidArgumentError(f"Line {line}: unknown key `{key}`.")

            if geometry is None:
                raise InvalidArgumentError(f"Line {line}: `{key}` needs a base geometry.")

            geometry_changes[name] = _convert(value, getattr(geometry, name), key, line)
        else:
            if name not in solver_fields:
                raise InvalidArgumentError(f"Line {line}: unknown key `{key}`.")

            solver_changes[name] = _convert(value, getattr(params, name), key, line)

    if geometry_changes:
        assert geometry is not None
        if "n_views" not in geometry_changes:
            geometry_changes["n_views"] = count_views(
                geometry_changes.get("angular_range_deg", geometry.angular_range_deg),
                geometry_changes.get("angle_step_deg", geometry.angle_step_deg),
            )

        geometry = replace(geometry, **geometry_changes)

    if solver_changes:
        params = replace(params, **solver_changes)

    return geometry, params


def write_config(path: Path | str, geometry: ScanGeometry | None = None, params: SolverParams | None = None) -> None:
    """Writes ``geometry`` and ``params`` in the ``key = value`` format read by ``read_config``."""
    lines = ["# lripct configuration"]
    if geometry is not None:
        lines += [f"geometry.{key} = {value!r}" for key, value in geometry.meta.items()]

    if params is not None:
        for key, value in params.meta.items():
            text = str(value).lower() if isinstance(value, bool) else repr(value)
            lines.append(f"solver.{key} = {text}")

    Path(path).write_text("\n".join(lines) + "\n")
