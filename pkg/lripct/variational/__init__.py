from lripct.variational.lrip import LripState, lrip_reconstruct, pd_reconstruct
from lripct.variational.objective import iteration_diagnostics, primal_objective
from lripct.variational.params import SolverParams
from lripct.variational.prior import PRIOR_METHODS, make_prior
from lripct.variational.resolvents import dual_prox_ls, u_update, u_update_objective
from lripct.variational.total_variation import div, grad, tv, tv_prox, tv_prox_values
from lripct.variational.tv_reconstruct import PrimalDualState, tv_reconstruct

__all__ = [
    "SolverParams",
    "grad",
    "div",
    "tv",
    "tv_prox",
    "tv_prox_values",
    "dual_prox_ls",
    "u_update",
    "u_update_objective",
    "primal_objective",
    "iteration_diagnostics",
    "tv_reconstruct",
    "PrimalDualState",
    "LripState",
    "lrip_reconstruct",
    "pd_reconstruct",
    "make_prior",
    "PRIOR_METHODS",
]
