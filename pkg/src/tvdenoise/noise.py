"""Seeded synthesis of the five benchmark noise types and their chains.

Every spec carries its own 64-bit seed and draws from a fresh PCG64 stream
(``numpy.random.default_rng``), so the same (image, spec) pair always
produces the same bits.  Outputs are deliberately not clamped to [0, 255];
clamping happens only when an image is exported, which keeps the additive
noise model exact for the metric computations.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .image import Image

__all__ = ["NoiseKind", "NoiseSpec", "add_noise", "add_noise_chain"]


class NoiseKind(Enum):
    GAUSSIAN = "gaussian"
    SALT_PEPPER = "salt_pepper"
    POISSON = "poisson"
    SPECKLE = "speckle"
    UNIFORM = "uniform"


# Canonical name of each kind's single parameter, used for serialization.
PARAM_NAMES = {
    NoiseKind.GAUSSIAN: "sigma",        # additive std-dev, intensity units
    NoiseKind.SALT_PEPPER: "density",   # corrupted fraction in [0, 1]
    NoiseKind.POISSON: "scale",         # photons per intensity unit
    NoiseKind.SPECKLE: "sigma",         # multiplicative std-dev
    NoiseKind.UNIFORM: "half_width",    # additive half-range, intensity units
}


@dataclass(frozen=True)
class NoiseSpec:
    """One noise draw: kind, its single parameter, and the stream seed."""

    kind: NoiseKind
    param: float
    seed: int

    def __post_init__(self):
        if not isinstance(self.kind, NoiseKind):
            raise ValueError(f"kind must be a NoiseKind, got {self.kind!r}")
        p = float(self.param)
        if self.kind is NoiseKind.SALT_PEPPER:
            if not (0.0 <= p <= 1.0):
                raise ValueError(f"salt & pepper density must lie in [0, 1], got {p}")
        elif self.kind is NoiseKind.POISSON:
            if not (p > 0.0):
                raise ValueError(f"poisson scale must be positive, got {p}")
        elif p < 0.0:
            raise ValueError(f"{PARAM_NAMES[self.kind]} must be nonnegative, got {p}")
        object.__setattr__(self, "param", p)
        object.__setattr__(self, "seed", int(self.seed))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            PARAM_NAMES[self.kind]: self.param,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict, seed: int | None = None) -> "NoiseSpec":
        """Parse a serialized spec; ``seed`` overrides or supplies the stream seed."""
        kind = NoiseKind(data["kind"])
        param = data[PARAM_NAMES[kind]]
        if seed is None:
            seed = data["seed"]
        return cls(kind, float(param), int(seed))


def add_noise(image: Image, spec: NoiseSpec) -> Image:
    """Corrupt ``image`` according to ``spec``; deterministic given the seed."""
    rng = np.random.default_rng(spec.seed)
    px = image.pixels
    kind, p = spec.kind, spec.param
    if kind is NoiseKind.GAUSSIAN:
        out = px + rng.normal(0.0, p, px.shape)
    elif kind is NoiseKind.SALT_PEPPER:
        # One uniform draw per pixel: [0, d/2) -> pepper, [d/2, d) -> salt.
        draw = rng.random(px.shape)
        out = px.copy()
        out[draw < p / 2.0] = 0.0
        out[(draw >= p / 2.0) & (draw < p)] = 255.0
    elif kind is NoiseKind.POISSON:
        # Negative intensities (possible after earlier unclamped noise)
        # get a zero photon rate.
        rate = np.maximum(px * p, 0.0)
        out = rng.poisson(rate).astype(float) / p
    elif kind is NoiseKind.SPECKLE:
        out = px * (1.0 + rng.normal(0.0, p, px.shape))
    else:  # UNIFORM
        out = px + rng.uniform(-p, p, px.shape)
    return Image(image.m, image.n, out)


def add_noise_chain(image: Image, specs: list[NoiseSpec]) -> Image:
    """Apply specs sequentially in list order; order matters for combinations."""
    if len(specs) < 1:
        raise ValueError("noise chain must contain at least one spec")
    current = image
    for spec in specs:
        current = add_noise(current, spec)
    return current
