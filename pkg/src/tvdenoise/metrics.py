"""Image similarity measurements: MSE, PSNR, global SSIM, and PPS.

Conventions, fixed so that recorded values stay stable:

* PSNR uses the 255 intensity peak and returns ``math.inf`` at zero MSE.
* SSIM is the single global statistic over the whole image (not the
  windowed variant), with population (1/N) variances.
* PPS is the product PSNR * SSIM; it inherits the infinity marker.

Metrics are computed on images exactly as given, including unclamped
real-valued intensities outside [0, 255].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import Image

__all__ = ["SsimConstants", "mse", "psnr", "ssim", "pps"]


@dataclass(frozen=True)
class SsimConstants:
    """Stabilizers for the SSIM denominators, on the 255-peak scale."""

    c1: float = (0.01 * 255.0) ** 2
    c2: float = (0.03 * 255.0) ** 2

    def __post_init__(self):
        if not (self.c1 > 0.0 and self.c2 > 0.0):
            raise ValueError("SSIM constants must be positive")


def _pair(u: Image, t: Image) -> tuple[np.ndarray, np.ndarray]:
    if (u.m, u.n) != (t.m, t.n):
        raise ValueError(
            f"image dimensions differ: {u.m}x{u.n} vs {t.m}x{t.n}"
        )
    return u.pixels, t.pixels


def mse(u: Image, t: Image) -> float:
    """Mean squared intensity difference."""
    a, b = _pair(u, t)
    d = a - b
    return float(d @ d) / a.size


def psnr(u: Image, t: Image) -> float:
    """Peak signal-to-noise ratio in dB; ``inf`` for identical images."""
    e = mse(u, t)
    if e == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0**2 / e)


def ssim(u: Image, t: Image, c: SsimConstants = SsimConstants()) -> float:
    """Global structural similarity over the whole image, in [-1, 1]."""
    a, b = _pair(u, t)
    if a.size < 2:
        raise ValueError("ssim needs at least 2 pixels")
    mu_u = float(np.mean(a))
    mu_t = float(np.mean(b))
    da = a - mu_u
    db = b - mu_t
    var_u = float(np.mean(da * da))
    var_t = float(np.mean(db * db))
    cov = float(np.mean(da * db))
    num = (2.0 * mu_u * mu_t + c.c1) * (2.0 * cov + c.c2)
    den = (mu_u**2 + mu_t**2 + c.c1) * (var_u + var_t + c.c2)
    return num / den


def pps(u: Image, t: Image, c: SsimConstants = SsimConstants()) -> float:
    """Product of PSNR and SSIM; ``inf`` marks perfect reconstruction."""
    p = psnr(u, t)
    if math.isinf(p):
        return math.inf
    return p * ssim(u, t, c)
