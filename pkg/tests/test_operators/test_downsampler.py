from __future__ import annotations

import numpy as np
import pytest

from lripct.geometry import Image
from lripct.operators import DownSampler, downsample, upsample_adjoint
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def test_downsample_picks_even_indices():
    img = Image(np.arange(16).reshape(4, 4))
    low = downsample(img, DownSampler(2, 4))

    assert np.array_equal(low.values, [[0, 2], [8, 10]])


def test_factor_one_is_identity():
    img = Image(np.arange(9).reshape(3, 3))
    assert np.array_equal(downsample(img, DownSampler(1, 3)).values, img.values)


def test_upsample_adjoint():
    up = upsample_adjoint(Image([[5.0]]), DownSampler(2, 2))
    assert np.array_equal(up.values, [[5, 0], [0, 0]])


def test_d_dt_is_identity():
    d = DownSampler(4, 16)
    img = Image(np.random.default_rng(0).random((16, 16)))
    low = downsample(img, d)

    assert np.array_equal(downsample(upsample_adjoint(low, d), d).values, low.values)


def test_adjoint_pair_is_exact():
    d = DownSampler(2, 8)
    rng = np.random.default_rng(1)
    for _ in range(10):
        u = Image(rng.integers(-5, 5, size=(8, 8)))
        v = Image(rng.integers(-5, 5, size=(4, 4)))
        assert np.sum(downsample(u, d).values * v.values) == np.sum(u.values * upsample_adjoint(v, d).values)


@pytest.mark.parametrize("factor", [2, 4, 8])
def test_dt_d_zeroes_pixels(factor):
    n = 16
    d = DownSampler(factor, n)
    img = Image(np.ones((n, n)))
    projected = upsample_adjoint(downsample(img, d), d)

    assert np.sum(projected.values == 0) == n * n * (1 - 1 / factor**2)


def test_matrix_structure():
    d = DownSampler(2, 4)
    m = d.matrix().toarray()

    assert np.array_equal(m @ m.T, np.eye(4))
    assert np.all(m.sum(axis=1) == 1)
    assert np.all(m.sum(axis=0) <= 1)
    assert np.array_equal(np.diag(m.T @ m).reshape(4, 4), d.mask())


def test_invalid():
    with pytest.raises(InvalidArgumentError):
        DownSampler(3, 9)

    with pytest.raises(InvalidArgumentError):
        DownSampler(4, 6)

    with pytest.raises(InvalidArgumentError):
        downsample(Image.zeros(6), DownSampler(2, 8))

    with pytest.raises(InvalidArgumentError):
        upsample_adjoint(Image.zeros(3), DownSampler(2, 8))
