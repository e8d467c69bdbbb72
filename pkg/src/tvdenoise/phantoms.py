"""Deterministic license-free stand-ins for the benchmark photographs.

Four scenes exercise the qualitatively different regimes a TV denoiser
meets: a smooth natural photo, a flat-regioned illustration, a mosaic with
boundaries everywhere, and a portrait-style composition of a dark figure
against a graded sky.  All are pure functions of the pixel coordinates
(plus one fixed-seed draw for the mosaic tiles), so regenerating them is
always bit-identical.
"""
from __future__ import annotations

import numpy as np

from .image import Image

__all__ = ["photo", "illustration", "mosaic", "portrait", "standard_images"]


def _coords(size: int):
    ax = np.linspace(0.0, 1.0, size)
    return np.meshgrid(ax, ax, indexing="xy")  # x across columns, y down rows


def photo(size: int = 256) -> Image:
    """Smooth outdoor-style scene: sky gradient, hills, sun disc, texture."""
    x, y = _coords(size)
    sky = 200.0 - 90.0 * y
    hills = 35.0 * np.sin(2.6 * np.pi * x + 1.2) * np.exp(-((y - 0.72) / 0.3) ** 2)
    sun = 55.0 * np.exp(-(((x - 0.75) ** 2 + (y - 0.2) ** 2) / 0.012))
    ripple = 6.0 * np.sin(14.0 * np.pi * x) * np.sin(10.0 * np.pi * y) * (y > 0.6)
    img = sky + hills + sun + ripple
    return Image.from_array(np.clip(img, 0.0, 255.0))


def illustration(size: int = 256) -> Image:
    """Flat-color digital-art look: bands, a ring, and a diagonal blade."""
    x, y = _coords(size)
    img = np.full((size, size), 60.0)
    img[y < 0.35] = 190.0
    img[(y >= 0.35) & (y < 0.55)] = 120.0
    r = np.sqrt((x - 0.35) ** 2 + (y - 0.62) ** 2)
    img[(r > 0.13) & (r < 0.2)] = 230.0
    img[r <= 0.13] = 25.0
    img[np.abs(x - y - 0.25) < 0.04] = 160.0
    return Image.from_array(img)


def mosaic(size: int = 256, tiles: int = 16) -> Image:
    """Tiled pattern with sharp boundaries between every tile."""
    rng = np.random.default_rng(1905)
    levels = rng.integers(20, 236, size=(tiles, tiles)).astype(float)
    tile = size // tiles
    img = np.kron(levels, np.ones((tile, tile)))
    pad = size - img.shape[0]
    if pad > 0:
        img = np.pad(img, ((0, pad), (0, pad)), mode="edge")
    return Image.from_array(img[:size, :size])


def portrait(size: int = 256) -> Image:
    """Portrait-style test scene: dark figure, tripod lines, graded background."""
    x, y = _coords(size)
    img = 170.0 - 60.0 * y + 20.0 * x
    head = (x - 0.48) ** 2 + (y - 0.3) ** 2 < 0.012
    body = (np.abs(x - 0.48) < 0.13) & (y > 0.38) & (y < 0.78)
    img[head | body] = 30.0
    arm = (np.abs(y - (0.45 + 0.25 * (x - 0.6))) < 0.02) & (x > 0.55) & (x < 0.85)
    img[arm] = 45.0
    leg1 = (np.abs(x - (0.62 + 0.18 * (y - 0.55))) < 0.008) & (y > 0.55) & (y < 0.95)
    leg2 = (np.abs(x - (0.78 - 0.1 * (y - 0.55))) < 0.008) & (y > 0.55) & (y < 0.95)
    img[leg1 | leg2] = 20.0
    img[y > 0.88] = 95.0
    return Image.from_array(np.clip(img, 0.0, 255.0))


def standard_images(size: int = 256) -> dict[str, Image]:
    """The four benchmark scenes keyed by name."""
    return {
        "photo": photo(size),
        "illustration": illustration(size),
        "mosaic": mosaic(size),
        "portrait": portrait(size),
    }
