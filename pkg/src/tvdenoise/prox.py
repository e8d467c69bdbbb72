"""Closed-form proximal maps used by the split Bregman sub-problems."""
from __future__ import annotations

import numpy as np

__all__ = ["shrink1", "cut", "shrink2_paired"]


def _check_threshold(gamma: float) -> float:
    g = float(gamma)
    if not (g >= 0.0):
        raise ValueError(f"shrinkage threshold must be nonnegative, got {gamma!r}")
    return g


def shrink1(v, gamma: float) -> np.ndarray:
    """Soft shrinkage, componentwise ``sign(v) * max(|v| - gamma, 0)``.

    This is the minimizer of ``gamma*||u||_1 + 0.5*||u - v||_2^2``.
    """
    g = _check_threshold(gamma)
    v = np.asarray(v, dtype=float)
    return np.sign(v) * np.maximum(np.abs(v) - g, 0.0)


def cut(v, gamma: float) -> np.ndarray:
    """Componentwise clamp to [-gamma, gamma]: ``v - shrink1(v, gamma)``.

    Computed as ``sign(v) * min(|v|, gamma)`` so the infinity-norm bound
    ``|cut(v, gamma)| <= gamma`` holds exactly in floating point.
    """
    g = _check_threshold(gamma)
    v = np.asarray(v, dtype=float)
    return np.sign(v) * np.minimum(np.abs(v), g)


def shrink2_paired(x, y, gamma: float):
    """Isotropic shrinkage of paired components.

    For each index, the pair ``(x_i, y_i)`` of Euclidean length ``s_i`` is
    scaled by ``max(s_i - gamma, 0) / s_i`` (zero when ``s_i == 0``).  This
    minimizes ``gamma*sqrt(a^2 + b^2) + 0.5*((a - x_i)^2 + (b - y_i)^2)``
    over the pair ``(a, b)``.
    """
    g = _check_threshold(gamma)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(
            f"paired inputs must be vectors of equal length, got {x.shape} and {y.shape}"
        )
    s = np.hypot(x, y)
    scale = np.zeros_like(s)
    nz = s > 0.0
    scale[nz] = np.maximum(s[nz] - g, 0.0) / s[nz]
    return x * scale, y * scale
