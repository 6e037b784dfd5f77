from __future__ import annotations

import numpy as np
import pytest

from lripct.geometry import Image
from lripct.metrics import rmse
from lripct.utils.exceptions import InvalidArgumentError
from lripct.variational import div, grad, tv, tv_prox, tv_prox_values

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def step_image(n: int = 8) -> Image:
    v = np.zeros((n, n))
    v[:, n // 2 :] = 1.0
    return Image(v)


def prox_objective(x: Image, v: Image, weight: float) -> float:
    return 0.5 * float(np.sum((x.values - v.values) ** 2)) + weight * tv(x.values)


def test_div_is_negative_adjoint_of_grad():
    rng = np.random.default_rng(0)
    u = rng.standard_normal((7, 9))
    p = rng.standard_normal((2, 7, 9))

    assert np.sum(grad(u) * p) == pytest.approx(-np.sum(u * div(p)))


def test_tv_of_step():
    assert tv(step_image(8).values) == pytest.approx(8.0)
    assert tv(np.ones((5, 5))) == 0


def test_zero_weight_is_identity():
    v = Image(np.random.default_rng(1).random((6, 6)))
    x = tv_prox(v, 0.0)

    assert isinstance(x, Image)
    assert np.array_equal(x.values, v.values)


@pytest.mark.parametrize("weight", [0.1, 1.0, 10.0])
def test_constant_image_is_fixed(weight):
    v = Image(np.full((6, 6), 0.3))
    assert np.allclose(tv_prox(v, weight).values, v.values)


def test_array_form_matches():
    v = Image(np.random.default_rng(4).random((8, 8)))
    assert np.array_equal(tv_prox(v, 0.2, 30).values, tv_prox_values(v.values, 0.2, 30))


@pytest.mark.slow
def test_matches_long_run_reference():
    v = step_image(8)
    reference = tv_prox(v, 0.1, inner_iters=100_000)
    approximate = tv_prox(v, 0.1, inner_iters=10_000)

    assert rmse(approximate, reference) <= 1e-4


def test_objective_decreases_with_inner_iterations():
    v = Image(step_image(8).values + 0.1 * np.random.default_rng(2).standard_normal((8, 8)))
    values = [prox_objective(tv_prox(v, 0.2, k), v, 0.2) for k in (1, 10, 100, 1000)]

    assert values[-1] <= values[0]
    assert values[-1] <= prox_objective(v, v, 0.2)


def test_nonexpansive():
    rng = np.random.default_rng(3)
    for _ in range(10):
        v1, v2 = Image(rng.random((8, 8))), Image(rng.random((8, 8)))
        distance = np.linalg.norm(tv_prox(v1, 0.3).values - tv_prox(v2, 0.3).values)
        assert distance <= np.linalg.norm(v1.values - v2.values) * (1 + 1e-6)


def test_invalid():
    with pytest.raises(InvalidArgumentError):
        tv_prox(Image.zeros(3), -1.0)

    with pytest.raises(InvalidArgumentError):
        tv_prox(np.zeros((3, 3)), 0.1)  # type: ignore
