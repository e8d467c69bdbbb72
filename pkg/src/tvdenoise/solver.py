"""Split Bregman outer iteration for the TV denoising model family.

One loop drives four models.  Writing ``Dx``/``Dy`` for the forward
differences and ``f`` for the noisy image, the objectives are

    one-norm:    ||Dx u||_1 + ||Dy u||_1 + mu*||u - f||_1
    anisotropic: ||Dx u||_1 + ||Dy u||_1 + alpha*||u - f||_2^2
    isotropic:   sum_i sqrt((Dx u)_i^2 + (Dy u)_i^2) + alpha*||u - f||_2^2
    mixed-norm:  ||Dx u||_1 + ||Dy u||_1 + mu*||u - f||_1 + alpha*||u - f||_2^2

The gradients are split as x = Dx u, y = Dy u; models with a 1-norm
fidelity additionally split the residual d = f - u.  Each constraint gets a
quadratic penalty with coefficient ``lam`` and a running Bregman vector, so
every sub-problem is either a shrinkage or one SPD linear solve.  The
mixed-norm fixed point is the unique minimizer of its (strictly convex)
objective, and the Bregman vectors stay bounded by the shrinkage thresholds
throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .image import Axis, DiffOperator, Image, _as_vector, unvectorize
from .linsolve import SolverError, USystem, solve_u
from .prox import shrink1, shrink2_paired

__all__ = [
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
    "DEFAULT_LAMBDA",
    "DEFAULT_MU",
    "DEFAULT_ALPHA",
]

# Fallback tuning parameters for callers that do not supply their own.
# These are benchmark-derived working values, not canonical constants; the
# benchmark config documents the values actually used for reported tables.
DEFAULT_LAMBDA = 1.0
DEFAULT_MU = 1.0
DEFAULT_ALPHA = 0.01


class ModelKind(Enum):
    ONE_NORM = "one_norm"
    ISOTROPIC = "isotropic"
    ANISOTROPIC = "anisotropic"
    MIXED_NORM = "mixed_norm"


class NumericalError(RuntimeError):
    """An iterate stopped being finite (overflow or NaN)."""


@dataclass(frozen=True)
class ModelSpec:
    """Which TV model to run, plus its tuning parameters.

    ``mu`` weighs the 1-norm fidelity, ``alpha`` the squared 2-norm
    fidelity, and ``lam`` is the Bregman penalty coefficient.  The
    isotropic/anisotropic baselines take their fidelity weight through
    ``alpha`` (i.e. alpha*||u - f||_2^2 as written in their objectives)
    and must leave ``mu`` at zero.
    """

    kind: ModelKind
    mu: float = 0.0
    alpha: float = 0.0
    lam: float = DEFAULT_LAMBDA

    def __post_init__(self):
        if not isinstance(self.kind, ModelKind):
            raise ValueError(f"kind must be a ModelKind, got {self.kind!r}")
        if self.mu < 0.0 or self.alpha < 0.0:
            raise ValueError("mu and alpha must be nonnegative")
        if self.lam <= 0.0:
            raise ValueError(f"lam must be positive, got {self.lam!r}")
        k = self.kind
        if k is ModelKind.MIXED_NORM and not (self.mu > 0.0 and self.alpha > 0.0):
            raise ValueError("mixed-norm model requires mu > 0 and alpha > 0")
        if k is ModelKind.ONE_NORM and not (self.mu > 0.0 and self.alpha == 0.0):
            raise ValueError("one-norm model requires mu > 0 and alpha == 0")
        if k in (ModelKind.ISOTROPIC, ModelKind.ANISOTROPIC) and not (
            self.mu == 0.0 and self.alpha > 0.0
        ):
            raise ValueError(f"{k.value} model requires mu == 0 and alpha > 0")


@dataclass(frozen=True)
class SolverConfig:
    """Outer-loop controls.

    ``epsilon`` stops the iteration once ``||u_k - u_{k-1}||_2`` drops below
    it; ``None`` resolves to the scale-aware default ``1e-3 * sqrt(m*n)`` so
    the per-pixel criterion is image-size independent.
    """

    epsilon: float | None = None
    max_outer: int = 500
    inner_tol: float = 1e-8
    inner_max_iter: int | None = None
    record_diagnostics: bool = True

    def __post_init__(self):
        if self.epsilon is not None and not (self.epsilon > 0.0):
            raise ValueError(f"epsilon must be positive, got {self.epsilon!r}")
        if self.max_outer < 1:
            raise ValueError(f"max_outer must be >= 1, got {self.max_outer!r}")

    def resolved_epsilon(self, m: int, n: int) -> float:
        if self.epsilon is not None:
            return self.epsilon
        return 1e-3 * math.sqrt(m * n)


class StopReason(Enum):
    TOLERANCE = "tolerance"
    ITERATION_CAP = "iteration_cap"


@dataclass(frozen=True)
class IterationDiag:
    """Per-iteration convergence record.

    ``residual_d``, ``residual_x``, ``residual_y`` are the splitting
    constraint violations ||d - (f - u)||, ||x - Dx u||, ||y - Dy u||; all
    three must vanish in the limit.  ``b*_inf`` are the infinity norms of
    the Bregman vectors, bounded by mu/(2*lam) and 1/(2*lam) respectively.
    """

    k: int
    step_norm: float
    residual_d: float
    residual_x: float
    residual_y: float
    objective: float
    b1_inf: float = 0.0
    b2_inf: float = 0.0
    b3_inf: float = 0.0


@dataclass(frozen=True)
class DenoiseResult:
    image: Image
    diagnostics: list[IterationDiag] = field(default_factory=list)
    stop_reason: StopReason = StopReason.ITERATION_CAP
    iterations: int = 0


def objective_value(u, f, m: int, n: int, model: ModelSpec) -> float:
    """Evaluate the selected model's objective at ``u`` exactly as written."""
    mn = int(m) * int(n)
    u = _as_vector(u, mn)
    f = _as_vector(f, mn)
    gx = DiffOperator(m, n, Axis.X).apply(u)
    gy = DiffOperator(m, n, Axis.Y).apply(u)
    if model.kind is ModelKind.ISOTROPIC:
        reg = float(np.sum(np.hypot(gx, gy)))
    else:
        reg = float(np.sum(np.abs(gx)) + np.sum(np.abs(gy)))
    diff = u - f
    fid = 0.0
    if model.mu:
        fid += model.mu * float(np.sum(np.abs(diff)))
    if model.alpha:
        fid += model.alpha * float(diff @ diff)
    return reg + fid


def denoise(f: Image, model: ModelSpec, config: SolverConfig = SolverConfig()) -> DenoiseResult:
    """Denoise ``f`` with the selected TV model.

    Runs the split Bregman outer loop from u = f until the step norm drops
    below the configured tolerance or the iteration cap is reached.  The
    solver never clamps; exporting to [0, 255] is the caller's business.
    """
    split_residual = model.kind in (ModelKind.ONE_NORM, ModelKind.MIXED_NORM)
    paired = model.kind is ModelKind.ISOTROPIC
    return _run_split_bregman(
        f,
        model,
        config,
        mu=model.mu,
        split_residual=split_residual,
        paired=paired,
    )


def denoise_pipeline(
    f: Image, stages: list[tuple[ModelSpec, SolverConfig]]
) -> Image:
    """Chain denoisers, feeding each stage's output to the next.

    Stage order matters: smoothing first and removing impulses first give
    different results on mixed noise.
    """
    if len(stages) < 1:
        raise ValueError("pipeline needs at least one stage")
    current = f
    for model, config in stages:
        current = denoise(current, model, config).image
    return current


def _run_split_bregman(
    f_img: Image,
    model: ModelSpec,
    config: SolverConfig,
    *,
    mu: float,
    split_residual: bool,
    paired: bool,
) -> DenoiseResult:
    """Generic split Bregman loop; ``model`` is used for objective reporting.

    ``mu``/``split_residual``/``paired`` select the update rules so the
    one-norm, anisotropic, isotropic and mixed-norm variants (and the
    mu -> 0 limit of the mixed machinery, used in tests) all share this
    one implementation.
    """
    m, n = f_img.m, f_img.n
    mn = m * n
    f = f_img.pixels.copy()
    lam, alpha = model.lam, model.alpha

    dx = DiffOperator(m, n, Axis.X)
    dy = DiffOperator(m, n, Axis.Y)
    system = USystem(m, n, lam, alpha, include_identity=split_residual)
    epsilon = config.resolved_epsilon(m, n)
    gamma_d = mu / (2.0 * lam)
    gamma_xy = 1.0 / (2.0 * lam)

    u = f.copy()
    d = np.zeros(mn)
    x = np.zeros(mn)
    y = np.zeros(mn)
    b1 = np.zeros(mn)
    b2 = np.zeros(mn)
    b3 = np.zeros(mn)

    diags: list[IterationDiag] = []
    stop = StopReason.ITERATION_CAP
    k = 0
    for k in range(1, config.max_outer + 1):
        u_prev = u

        if split_residual:
            rhs = lam * (
                f - d + b1 + dx.apply_transpose(x - b2) + dy.apply_transpose(y - b3)
            )
            if alpha:
                rhs += alpha * f
        else:
            rhs = alpha * f + lam * (
                dx.apply_transpose(x - b2) + dy.apply_transpose(y - b3)
            )

        try:
            u = solve_u(
                system,
                rhs,
                tol=config.inner_tol,
                max_iter=config.inner_max_iter,
                warm_start=u_prev,
            )
        except SolverError as err:
            raise SolverError(
                f"inner solve failed at outer iteration {k}: {err}",
                residual=err.residual,
                iterations=err.iterations,
            ) from err
        if not np.isfinite(u).all():
            raise NumericalError(f"iterate became non-finite at outer iteration {k}")

        gx = dx.apply(u)
        gy = dy.apply(u)
        # Each Bregman update b <- b + (constraint violation) is written as
        # v - shrink(v) on the shared shrinkage input v, which is the cut of
        # v and therefore bounded by the shrinkage threshold.
        if split_residual:
            v1 = f - u + b1
            d = shrink1(v1, gamma_d)
            b1 = v1 - d
        vx = gx + b2
        vy = gy + b3
        if paired:
            x, y = shrink2_paired(vx, vy, gamma_xy)
        else:
            x = shrink1(vx, gamma_xy)
            y = shrink1(vy, gamma_xy)
        b2 = vx - x
        b3 = vy - y

        step = float(np.linalg.norm(u - u_prev))
        if config.record_diagnostics:
            resid_d = (
                float(np.linalg.norm(d - (f - u))) if split_residual else 0.0
            )
            diags.append(
                IterationDiag(
                    k=k,
                    step_norm=step,
                    residual_d=resid_d,
                    residual_x=float(np.linalg.norm(x - gx)),
                    residual_y=float(np.linalg.norm(y - gy)),
                    objective=objective_value(u, f, m, n, model),
                    b1_inf=float(np.max(np.abs(b1))) if split_residual else 0.0,
                    b2_inf=float(np.max(np.abs(b2))),
                    b3_inf=float(np.max(np.abs(b3))),
                )
            )
        if step <= epsilon:
            stop = StopReason.TOLERANCE
            break

    return DenoiseResult(
        image=unvectorize(u, m, n),
        diagnostics=diags,
        stop_reason=stop,
        iterations=k,
    )
