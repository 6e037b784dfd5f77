from __future__ import annotations

import numpy as np
import pytest

from lripct.conditioning import condition_number, pseudoinverse
from lripct.utils.exceptions import DegenerateInputError, InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def random_matrix(rng: np.random.Generator) -> np.ndarray:
    rows, cols = rng.integers(1, 41), rng.integers(1, 26)
    rank = rng.integers(1, min(rows, cols) + 1)
    return rng.standard_normal((rows, rank)) @ rng.standard_normal((rank, cols))


def test_identity():
    assert np.allclose(pseudoinverse(np.eye(4)), np.eye(4))


def test_column_vector():
    assert np.allclose(pseudoinverse([3.0, 4.0]), [[0.12, 0.16]])


def test_rank_deficient_diagonal():
    assert np.allclose(pseudoinverse(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]))


def test_penrose_identities():
    rng = np.random.default_rng(0)
    for _ in range(100):
        m = random_matrix(rng)
        p = pseudoinverse(m)
        scale = np.linalg.norm(m) * np.linalg.norm(p)

        assert np.linalg.norm(m @ p @ m - m) <= 1e-8 * np.linalg.norm(m) * scale
        assert np.linalg.norm(p @ m @ p - p) <= 1e-8 * np.linalg.norm(p) * scale
        assert np.allclose(m @ p, (m @ p).T, atol=1e-8 * scale)
        assert np.allclose(p @ m, (p @ m).T, atol=1e-8 * scale)


def test_vector_norm_identity():
    f = np.random.default_rng(1).standard_normal(50)
    assert np.linalg.norm(f) * np.linalg.norm(pseudoinverse(f)) == pytest.approx(1.0, abs=1e-12)


def test_zero_matrix():
    with pytest.raises(DegenerateInputError):
        pseudoinverse(np.zeros((3, 2)))

    with pytest.raises(DegenerateInputError):
        condition_number(np.zeros((2, 2)))


def test_invalid_input():
    with pytest.raises(InvalidArgumentError):
        pseudoinverse([[1.0, np.inf]])

    with pytest.raises(InvalidArgumentError):
        pseudoinverse(np.eye(2), tol=-1)

    with pytest.raises(InvalidArgumentError):
        condition_number(np.eye(2), "fro")


@pytest.mark.parametrize("norm", ["1", "2", "inf", "one", "two"])
def test_identity_condition(norm):
    assert condition_number(np.eye(3), norm).cond == pytest.approx(1.0)


def test_condition_examples():
    report = condition_number(np.diag([4.0, 1.0]), "2")
    assert report.cond == pytest.approx(4.0)
    assert report.rank == 2

    deficient = condition_number(np.diag([1.0, 0.0]), "2")
    assert deficient.cond == pytest.approx(1.0)
    assert deficient.rank == 1


def test_condition_two_norm_is_singular_value_ratio():
    m = np.random.default_rng(2).standard_normal((20, 12))
    s = np.linalg.svd(m, compute_uv=False)
    report = condition_number(m, "two")

    assert report.cond == pytest.approx(s[0] / s[-1], rel=1e-8)
    assert report.cond == pytest.approx(report.matrix_norm * report.pinv_norm)


def test_condition_bounds():
    """
    Expects
    -------
    * Every generalized condition number is at least 1.
    * For square matrices the 2-norm number is bounded by the geometric mean of the 1- and inf-norm numbers.
    """
    rng = np.random.default_rng(3)
    for _ in range(30):
        m = rng.standard_normal((8, 8))
        cond = {kind: condition_number(m, kind).cond for kind in ("one", "two", "inf")}

        assert min(cond.values()) >= 1 - 1e-9
        assert cond["two"] <= np.sqrt(cond["one"] * cond["inf"]) * (1 + 1e-6)
