from __future__ import annotations

from typing import Any

import json
from dataclasses import asdict, is_dataclass
from pathlib import Path

import numpy as np


class NumpyEncoder(json.JSONEncoder):
    """Custom encoder for numpy data types and the package's value objects.

    From https://stackoverflow.com/a/61903895
    """

    def default(self, obj: Any) -> Any:
        """Handle numpy datatypes, paths and dataclasses if present by converting to native python

        Parameters
        ----------
        obj : Any
            Object to serialize

        Returns
        -------
        Any
            Object in native python
        """
        if isinstance(obj, np.integer):
            return int(obj)

        elif isinstance(obj, np.floating):
            # JSON has no infinity; keep it readable and loadable
            value = float(obj)
            if not np.isfinite(value):
                return str(value)

            return value

        elif isinstance(obj, np.ndarray):
            return obj.tolist()

        elif isinstance(obj, np.bool_):
            return bool(obj)

        elif isinstance(obj, Path):
            return str(obj)

        elif is_dataclass(obj) and not isinstance(obj, type):
            return asdict(obj)

        return json.JSONEncoder.default(self, obj)
