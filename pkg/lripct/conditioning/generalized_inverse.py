from __future__ import annotations

from typing import Any

from dataclasses import dataclass

import numpy as np
from typing_extensions import Literal

from lripct.constants import VERY_SMALL_NUMBER
from lripct.utils.exceptions import DegenerateInputError, InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"

NormKind = Literal["one", "two", "inf"]

# Spellings accepted on the command line and in config files
_NORM_ALIASES = {
    "1": "one",
    "one": "one",
    "2": "two",
    "two": "two",
    "inf": "inf",
}


def normalize_norm_kind(norm_kind: str) -> NormKind:
    """Maps ``1``, ``2``, ``inf`` (and ``one``, ``two``) to the canonical norm names."""
    try:
        return _NORM_ALIASES[str(norm_kind).lower()]  # type: ignore
    except KeyError:
        raise InvalidArgumentError(f"Unknown norm {norm_kind!r}. Choose from 1, 2 or inf.")


def _as_matrix(m: Any) -> np.ndarray:
    matrix = np.asarray(m, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix[:, None]

    if matrix.ndim != 2 or matrix.size == 0:
        raise InvalidArgumentError(f"Expected a non-empty 2d matrix, got shape {matrix.shape}.")

    if not np.all(np.isfinite(matrix)):
        raise InvalidArgumentError("Matrix entries must be finite.")

    if not np.any(matrix):
        raise DegenerateInputError("The zero matrix has no meaningful pseudoinverse or condition number.")

    return matrix


def _truncated_svd(m: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """Thin SVD with singular values at most ``tol * sigma_max`` dropped."""
    if tol < 0:
        raise InvalidArgumentError(f"The singular-value tolerance must be nonnegative, got {tol}.")

    u, s, vt = np.linalg.svd(m, full_matrices=False)
    threshold = tol * s[0]
    keep = s > threshold

    return u[:, keep], s[keep], vt[keep], threshold


def pseudoinverse(m: Any, tol: float = VERY_SMALL_NUMBER) -> np.ndarray:
    """Moore-Penrose pseudoinverse through the singular value decomposition.

    Parameters
    ----------
    m : array-like [rows, cols]
        A 1d input is treated as a column vector.
    tol : float, defaults to 1e-10
        Singular values at most ``tol * sigma_max`` are treated as zero.

    Returns
    -------
    m_pinv : np.ndarray [cols, rows]
    """
    u, s, vt, _ = _truncated_svd(_as_matrix(m), tol)
    return (vt.T / s) @ u.T


@dataclass(frozen=True)
class ConditionReport:
    """Generalized condition number ``||m|| * ||m^+||`` in one norm.

    Parameters
    ----------
    norm_kind : NormKind
    matrix_norm : float
    pinv_norm : float
    cond : float
    rank : int
        Number of singular values above ``sv_threshold``.
    sv_threshold : float
        Absolute singular-value cutoff.
    """

    norm_kind: NormKind
    matrix_norm: float
    pinv_norm: float
    cond: float
    rank: int
    sv_threshold: float


def condition_number(m: Any, norm_kind: str = "two", tol: float = VERY_SMALL_NUMBER) -> ConditionReport:
    """Generalized condition number of ``m`` in the 1-, 2- or infinity-norm.

    The 2-norm path reads ``sigma_max / sigma_min`` off the truncated spectrum, where ``sigma_min`` is the smallest
    singular value kept. The 1- and infinity-norms are evaluated on ``m`` and its explicit pseudoinverse.
    """
    norm_kind = normalize_norm_kind(norm_kind)
    matrix = _as_matrix(m)
    u, s, vt, threshold = _truncated_svd(matrix, tol)

    if norm_kind == "two":
        matrix_norm = float(s[0])
        pinv_norm = float(1.0 / s[-1])
        cond = float(s[0] / s[-1])
    else:
        pinv = (vt.T / s) @ u.T
        order = 1 if norm_kind == "one" else np.inf
        matrix_norm = float(np.linalg.norm(matrix, order))
        pinv_norm = float(np.linalg.norm(pinv, order))
        cond = matrix_norm * pinv_norm

    return ConditionReport(
        norm_kind=norm_kind,
        matrix_norm=matrix_norm,
        pinv_norm=pinv_norm,
        cond=cond,
        rank=len(s),
        sv_threshold=float(threshold),
    )
