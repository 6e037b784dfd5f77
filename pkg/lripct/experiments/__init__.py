from lripct.experiments.cells import METHODS, PRIOR_SOURCES, reconstruct_cell
from lripct.experiments.repro import (
    method_label,
    PRIOR_SWEEP_COLUMNS,
    TABLE3_COLUMNS,
    TABLE6_COLUMNS,
    TIMING_COLUMNS,
    ReproResult,
    prior_sweep,
    table3,
    table6,
)

__all__ = [
    "reconstruct_cell",
    "METHODS",
    "PRIOR_SOURCES",
    "ReproResult",
    "method_label",
    "table3",
    "table6",
    "prior_sweep",
    "TABLE3_COLUMNS",
    "TIMING_COLUMNS",
    "TABLE6_COLUMNS",
    "PRIOR_SWEEP_COLUMNS",
]
