from __future__ import annotations

from typing import Any, Sequence

import datetime
import json
import platform
from pathlib import Path

import pandas as pd

import lripct
from lripct.utils.numpyencoder import NumpyEncoder

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def write_table(rows: Sequence[dict[str, Any]], columns: list[str], path: Path | str) -> None:
    """Writes ``rows`` as a CSV file with exactly ``columns`` as header. Missing values are written empty."""
    df = pd.DataFrame(list(rows), columns=columns)
    df.to_csv(path, index=False, lineterminator="\n")


def write_meta(path: Path | str, **info: Any) -> Path:
    """Writes the provenance sidecar ``<path>.meta.json`` next to an output file.

    The sidecar records the lripct version, the platform and the creation time together with ``info`` (seeds,
    parameters).
    """
    meta_path = Path(f"{path}.meta.json")
    meta = {
        "file": Path(path).name,
        "lripct_version": lripct.version,
        "platform": platform.platform(),
        "python": platform.python_version(),
        "created_utc": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
        **info,
    }
    with open(meta_path, "w") as fh:
        json.dump(meta, fh, indent=2, cls=NumpyEncoder)

    return meta_path
