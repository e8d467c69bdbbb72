"""Total-variation image denoising with mixed 1-norm/2-norm fidelity.

The package bundles the four TV denoising models (1-norm, isotropic,
anisotropic, and mixed-norm fidelity) behind one split Bregman solver,
plus seeded noise synthesis, similarity metrics, PGM/PNG I/O, and a
reproducible benchmark harness.
"""

from .image import Axis, DiffOperator, Image, unvectorize, vectorize
from .linsolve import SolverError, USystem, solve_u
from .metrics import SsimConstants, mse, pps, psnr, ssim
from .noise import NoiseKind, NoiseSpec, add_noise, add_noise_chain
from .pgm import clamp_for_export, read_image, read_pgm, read_png, write_pgm
from .prox import cut, shrink1, shrink2_paired
from .solver import (
    DenoiseResult,
    IterationDiag,
    ModelKind,
    ModelSpec,
    NumericalError,
    SolverConfig,
    StopReason,
    denoise,
    denoise_pipeline,
    objective_value,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "DiffOperator",
    "Image",
    "vectorize",
    "unvectorize",
    "shrink1",
    "cut",
    "shrink2_paired",
    "USystem",
    "solve_u",
    "SolverError",
    "ModelKind",
    "ModelSpec",
    "SolverConfig",
    "StopReason",
    "IterationDiag",
    "DenoiseResult",
    "NumericalError",
    "denoise",
    "denoise_pipeline",
    "objective_value",
    "NoiseKind",
    "NoiseSpec",
    "add_noise",
    "add_noise_chain",
    "SsimConstants",
    "mse",
    "psnr",
    "ssim",
    "pps",
    "read_image",
    "read_pgm",
    "read_png",
    "write_pgm",
    "clamp_for_export",
    "__version__",
]
