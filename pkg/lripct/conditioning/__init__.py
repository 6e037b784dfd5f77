from lripct.conditioning.generalized_inverse import (
    ConditionReport,
    condition_number,
    normalize_norm_kind,
    pseudoinverse,
)
from lripct.conditioning.theorem import (
    CONDITION_COLUMNS,
    ConditionRow,
    TheoremCheck,
    condition_sweep,
    theorem1_construction,
    verify_theorem1,
)

__all__ = [
    "pseudoinverse",
    "condition_number",
    "normalize_norm_kind",
    "ConditionReport",
    "TheoremCheck",
    "ConditionRow",
    "CONDITION_COLUMNS",
    "verify_theorem1",
    "condition_sweep",
    "theorem1_construction",
]
