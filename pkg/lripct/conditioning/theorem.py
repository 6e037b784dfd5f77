from __future__ import annotations

from typing import Any

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from lripct.conditioning.generalized_inverse import (
    ConditionReport,
    condition_number,
    normalize_norm_kind,
    pseudoinverse,
)
from lripct.constants import VERY_SMALL_NUMBER
from lripct.geometry import ScanGeometry, default_geometry
from lripct.operators import build_system_matrix
from lripct.runner import AbstractRunner, Cell, SerialRunner, StatusType
from lripct.utils.exceptions import InvalidArgumentError, LripctError
from lripct.utils.logging import get_logger

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

logger = get_logger(__name__)

# Relative slack of the ordering check cond(A_l) <= cond(A)
ORDERING_SLACK = 1e-6

CONDITION_COLUMNS = ["coverage_deg", "tau", "norm", "cond_full", "cond_low", "holds"]


@dataclass(frozen=True)
class TheoremCheck:
    """Condition numbers of a full-resolution system matrix and of its coarsened counterpart."""

    cond_full: float
    cond_low: float
    holds: bool


@dataclass(frozen=True)
class ConditionRow:
    """One cell of a condition-number sweep."""

    coverage_deg: float
    tau: int
    norm: str
    cond_full: float
    cond_low: float
    holds: bool


@lru_cache(maxsize=32)
def _system_condition(geom: ScanGeometry, norm_kind: str, tol: float, budget: int | None) -> ConditionReport:
    matrix = build_system_matrix(geom, budget=budget)
    return condition_number(matrix.to_dense(), norm_kind, tol)


def verify_theorem1(
    geom: ScanGeometry,
    tau: int,
    norm_kind: str = "two",
    tol: float = VERY_SMALL_NUMBER,
    budget: int | None = None,
) -> TheoremCheck:
    """Compares the condition number of the system matrix of ``geom`` with the one of the same scan on a grid
    coarsened by ``tau``.

    The coarse matrix keeps views and bins and only enlarges the pixels, so it is the fine matrix with groups of
    ``tau`` x ``tau`` columns summed.

    Parameters
    ----------
    geom : ScanGeometry
    tau : int
        Coarsening factor. ``geom.n`` must be divisible by it.
    norm_kind : str, defaults to "two"
    tol : float, defaults to 1e-10
        Relative singular-value cutoff.
    budget : int | None, defaults to None
        Explicit-matrix budget passed to ``build_system_matrix``.

    Returns
    -------
    check : TheoremCheck
        ``holds`` is ``cond_low <= cond_full * (1 + 1e-6)``.
    """
    norm_kind = normalize_norm_kind(norm_kind)
    low = geom.coarsen(tau)

    full = _system_condition(geom, norm_kind, tol, budget)
    if tau == 1:
        coarse = full
    else:
        coarse = _system_condition(low, norm_kind, tol, budget)

    holds = coarse.cond <= full.cond * (1.0 + ORDERING_SLACK)
    if not holds:
        logger.warning(
            f"cond(A_l) = {coarse.cond:.6g} exceeds cond(A) = {full.cond:.6g} "
            f"for n={geom.n}, tau={tau}, norm={norm_kind}."
        )

    return TheoremCheck(cond_full=full.cond, cond_low=coarse.cond, holds=bool(holds))


def _condition_cell(n: int, coverage_deg: float, tau: int, norm_kind: str, tol: float) -> dict[str, Any]:
    check = verify_theorem1(default_geometry(n, coverage_deg), tau, norm_kind, tol)
    return {"cond_full": check.cond_full, "cond_low": check.cond_low, "holds": check.holds}


def condition_sweep(
    n: int,
    coverages: list[float],
    taus: list[int],
    norm_kind: str = "two",
    tol: float = VERY_SMALL_NUMBER,
    runner: AbstractRunner | None = None,
) -> list[ConditionRow]:
    """Runs ``verify_theorem1`` on ``default_geometry(n, coverage)`` for every coverage and factor.

    Rows are ordered by coverage first, then by factor, in the order given.
    """
    norm_kind = normalize_norm_kind(norm_kind)
    for tau in taus:
        if int(tau) != tau or tau < 1 or n % tau != 0:
            raise InvalidArgumentError(f"Image side {n} is not divisible by the factor {tau}.")

    keys = [(float(coverage), int(tau)) for coverage in coverages for tau in taus]
    cells = [
        Cell(
            index=index,
            key=key,
            function=_condition_cell,
            kwargs={"n": n, "coverage_deg": key[0], "tau": key[1], "norm_kind": norm_kind, "tol": tol},
        )
        for index, key in enumerate(keys)
    ]

    if runner is None:
        runner = SerialRunner()

    rows = []
    for result in runner.run_cells(cells):
        if result.status != StatusType.SUCCESS:
            raise LripctError(f"Condition cell {result.key} failed: {result.additional_info.get('error')}")

        rows.append(
            ConditionRow(
                coverage_deg=result.key[0],
                tau=result.key[1],
                norm=norm_kind,
                cond_full=result.values["cond_full"],
                cond_low=result.values["cond_low"],
                holds=result.values["holds"],
            )
        )

    return rows


def theorem1_construction(a: Any, d: Any, f: Any, f_l: Any, tol: float = VERY_SMALL_NUMBER) -> np.ndarray:
    """Rank-one low-resolution matrix ``A_l = f_l f^+ A D^+``.

    ``f^+ = f^T / ||f||^2`` for a data vector ``f``, so ``A_l`` maps every coarse image onto a multiple of ``f_l``.

    Parameters
    ----------
    a : array-like [M, N]
        Full-resolution system matrix.
    d : array-like [N_l, N]
        Down-sampling matrix.
    f : array-like [M]
        Full-resolution data vector.
    f_l : array-like [M]
        Low-resolution data vector.

    Returns
    -------
    a_l : np.ndarray [M, N_l]
    """
    a = np.asarray(a, dtype=np.float64)
    d = np.asarray(d.toarray() if hasattr(d, "toarray") else d, dtype=np.float64)
    f = np.asarray(f, dtype=np.float64).reshape(-1)
    f_l = np.asarray(f_l, dtype=np.float64).reshape(-1)

    if a.shape[0] != len(f) or len(f_l) != len(f) or d.shape[1] != a.shape[1]:
        raise InvalidArgumentError(
            f"Incompatible shapes: A {a.shape}, D {d.shape}, f ({len(f)},), f_l ({len(f_l)},)."
        )

    f_pinv = pseudoinverse(f, tol)
    return np.outer(f_l, f_pinv @ a @ pseudoinverse(d, tol))
