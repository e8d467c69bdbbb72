"""Dense reference constructions shared by the test modules.

The library applies all operators matrix-free; these helpers build the
dense equivalents by their literal Kronecker definitions so tests can
compare against an independent path.
"""
from __future__ import annotations

import numpy as np


def dense_g(n: int) -> np.ndarray:
    """Forward-difference matrix with -1/+1 bidiagonal and a zero last row."""
    g = np.zeros((n, n))
    for i in range(n - 1):
        g[i, i] = -1.0
        g[i, i + 1] = 1.0
    return g


def dense_dx(m: int, n: int) -> np.ndarray:
    return np.kron(dense_g(n), np.eye(m))


def dense_dy(m: int, n: int) -> np.ndarray:
    return np.kron(np.eye(n), dense_g(m))


def dense_system(
    m: int, n: int, lam: float, alpha: float, include_identity: bool = True
) -> np.ndarray:
    dx = dense_dx(m, n)
    dy = dense_dy(m, n)
    eye = np.eye(m * n)
    core = dx.T @ dx + dy.T @ dy
    if include_identity:
        core = core + eye
    return lam * core + alpha * eye
