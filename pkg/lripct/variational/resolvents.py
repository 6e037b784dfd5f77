from __future__ import annotations

import numpy as np

from lripct.geometry import Image, Sinogram
from lripct.operators import DownSampler, downsample, upsample_adjoint
from lripct.utils.exceptions import InvalidArgumentError

__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


def dual_prox_values(p_prev: np.ndarray, au: np.ndarray, f: np.ndarray, tau_step: float) -> np.ndarray:
    """Raw-array form of ``dual_prox_ls``."""
    return (p_prev + tau_step * (au - f)) / (1.0 + tau_step)


def u_update_values(u_tilde: np.ndarray, prior: np.ndarray, mask: np.ndarray, mu: float, r: float) -> np.ndarray:
    """Raw-array form of ``u_update``. ``prior`` is ``D^T u_l`` and ``mask`` the diagonal of ``D^T D``."""
    values = np.array(u_tilde, dtype=np.float64)
    values[mask] = (mu * values[mask] + r * prior[mask]) / (mu + r)
    return values


def dual_prox_ls(p_prev: Sinogram, au: Sinogram, f: Sinogram, tau_step: float) -> Sinogram:
    """Resolvent of the least-squares conjugate ``F*(p) = 1/2 ||p||^2 + <p, f>``.

    ``p = (p_prev + tau_step (Au - f)) / (1 + tau_step)``, elementwise.
    """
    if not p_prev.shape == au.shape == f.shape:
        raise InvalidArgumentError(f"Sinogram shapes differ: {p_prev.shape}, {au.shape}, {f.shape}.")

    if tau_step <= 0:
        raise InvalidArgumentError(f"`tau_step` must be positive, got {tau_step}.")

    return Sinogram(dual_prox_values(p_prev.values, au.values, f.values, tau_step))


def u_update(u_tilde: Image, u_l: Image, d: DownSampler, mu: float, r: float) -> Image:
    """Exact minimizer of ``mu/2 ||u - u_tilde||^2 + r/2 ||D u - u_l||^2``.

    ``D^T D`` is a 0/1 diagonal: sampled pixels become ``(mu u_tilde + r u_l) / (mu + r)``, all others keep
    ``u_tilde``.
    """
    if u_tilde.shape != (d.full_n, d.full_n):
        raise InvalidArgumentError(f"Image of shape {u_tilde.shape} does not match the {d.full_n} x {d.full_n} grid.")

    if mu <= 0 or r < 0:
        raise InvalidArgumentError(f"Need mu > 0 and r >= 0, got mu={mu}, r={r}.")

    prior = upsample_adjoint(u_l, d).values
    return Image(u_update_values(u_tilde.values, prior, d.mask(), mu, r))


def u_update_objective(u: Image, u_tilde: Image, u_l: Image, d: DownSampler, mu: float, r: float) -> float:
    """Value of the objective minimized by ``u_update``."""
    proximity = np.sum((u.values - u_tilde.values) ** 2)
    prior = np.sum((downsample(u, d).values - u_l.values) ** 2)
    return float(0.5 * mu * proximity + 0.5 * r * prior)
