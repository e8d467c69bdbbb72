"""Reference minimizer used in tests to certify the denoising solvers.

Plain subgradient descent on the model objective, with dense difference
matrices built locally by their literal Kronecker definition.  Nothing here
touches the split Bregman path except :func:`tvdenoise.solver.objective_value`,
so agreement between the two methods is meaningful evidence that both found
the minimizer.  Accuracy over speed: this code only runs on tiny images
inside the test suite and is not part of the library API.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import _as_vector
from .solver import ModelKind, ModelSpec, objective_value

__all__ = ["OracleConfig", "oracle_minimize"]

_MAX_PIXELS = 256


@dataclass(frozen=True)
class OracleConfig:
    """Step schedule and budget for the reference minimizer.

    ``decay`` selects the step rule: ``"inv_sqrt"`` uses eta0/sqrt(k+1),
    ``"inv_linear"`` uses eta0/(k+1) (the faster choice when the objective
    has a strongly convex 2-norm fidelity term).  ``objective_tol`` ends the
    run early once the best objective falls to or below it; 0 disables the
    early exit for objectives with positive minima.
    """

    eta0: float = 1.0
    iterations: int = 200_000
    decay: str = "inv_sqrt"
    objective_tol: float = 0.0

    def __post_init__(self):
        if not (self.eta0 > 0.0):
            raise ValueError(f"eta0 must be positive, got {self.eta0!r}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations!r}")
        if self.decay not in ("inv_sqrt", "inv_linear"):
            raise ValueError(f"unknown decay rule {self.decay!r}")


def _difference_matrix(n: int) -> np.ndarray:
    # Forward differences with a zero last row, built literally.
    g = np.zeros((n, n))
    for i in range(n - 1):
        g[i, i] = -1.0
        g[i, i + 1] = 1.0
    return g


def oracle_minimize(
    f, m: int, n: int, model: ModelSpec, config: OracleConfig = OracleConfig()
) -> np.ndarray:
    """Minimize the model objective by subgradient descent; return the best iterate.

    Restricted to m*n <= 256.  Starts from the observed image, takes the
    zero subgradient at every 1-norm kink (sign(0) = 0), and tracks the
    iterate with the lowest objective seen.
    """
    mn = int(m) * int(n)
    if mn > _MAX_PIXELS:
        raise ValueError(
            f"reference minimizer is restricted to {_MAX_PIXELS} pixels, got {mn}"
        )
    f = _as_vector(f, mn)
    dense_dx = np.kron(_difference_matrix(n), np.eye(m))
    dense_dy = np.kron(np.eye(n), _difference_matrix(m))
    dxt = dense_dx.T.copy()
    dyt = dense_dy.T.copy()
    isotropic = model.kind is ModelKind.ISOTROPIC
    mu, alpha = model.mu, model.alpha

    u = f.copy()
    best_u = u.copy()
    best_obj = objective_value(u, f, m, n, model)
    for k in range(config.iterations):
        if best_obj <= config.objective_tol:
            break
        gx = dense_dx @ u
        gy = dense_dy @ u
        if isotropic:
            s = np.sqrt(gx * gx + gy * gy)
            w = np.zeros_like(s)
            nz = s > 0.0
            w[nz] = 1.0 / s[nz]
            grad = dxt @ (gx * w) + dyt @ (gy * w)
        else:
            grad = dxt @ np.sign(gx) + dyt @ np.sign(gy)
        diff = u - f
        if mu:
            grad += mu * np.sign(diff)
        if alpha:
            grad += (2.0 * alpha) * diff
        if config.decay == "inv_sqrt":
            eta = config.eta0 / math.sqrt(k + 1.0)
        else:
            eta = config.eta0 / (k + 1.0)
        u = u - eta * grad
        obj = objective_value(u, f, m, n, model)
        if obj < best_obj:
            best_obj = obj
            best_u = u.copy()
    return best_u
