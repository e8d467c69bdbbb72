"""Matrix-free conjugate-gradient solve of the denoiser's inner SPD system.

The outer iteration repeatedly solves ``A u = r`` with

    A = lam * (c*I + Dx^T Dx + Dy^T Dy) + alpha * I

where ``c`` is 1 for the models that split the residual ``d = f - u`` and 0
for the pure gradient-split baselines.  ``A`` is symmetric positive definite
(the ``lam*I`` term, or ``alpha > 0`` when it is absent, guarantees it) and
has five-point-stencil sparsity, so conjugate gradients with the previous
outer iterate as warm start is the natural solver; ``A`` itself is never
materialized.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import Axis, DiffOperator, _as_vector

__all__ = ["SolverError", "USystem", "solve_u"]


class SolverError(RuntimeError):
    """Inner linear solve did not reach the requested tolerance.

    Attributes
    ----------
    residual : float
        Relative residual ``||A u - r|| / max(||r||, tiny)`` at abort.
    iterations : int
        Number of CG iterations performed.
    """

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(message)
        self.residual = float(residual)
        self.iterations = int(iterations)


@dataclass(frozen=True, eq=False)
class USystem:
    """The SPD system matrix of the u-sub-problem, applied matrix-free."""

    m: int
    n: int
    lam: float
    alpha: float = 0.0
    include_identity: bool = True

    def __post_init__(self):
        if self.lam <= 0.0:
            raise ValueError(f"lam must be positive, got {self.lam!r}")
        if self.alpha < 0.0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha!r}")
        if not self.include_identity and self.alpha <= 0.0:
            raise ValueError(
                "without the identity term, alpha must be positive to keep "
                "the system positive definite"
            )
        object.__setattr__(self, "_dx", DiffOperator(self.m, self.n, Axis.X))
        object.__setattr__(self, "_dy", DiffOperator(self.m, self.n, Axis.Y))

    @property
    def size(self) -> int:
        return self.m * self.n

    def apply(self, u) -> np.ndarray:
        """Return ``A @ u`` without materializing ``A``.

        The two difference/adjoint compositions Dx^T Dx + Dy^T Dy reduce to
        one five-point stencil with Neumann-style ends, evaluated here in a
        single fused pass over the grid (this is the solver's hot path).
        :meth:`apply_composed` keeps the explicit operator composition for
        cross-checking.
        """
        u = _as_vector(u, self.size)
        m, n = self.m, self.n
        U = u.reshape((m, n), order="F")
        lap = np.zeros((m, n), order="F")
        if n > 1:
            lap[:, 0] = U[:, 0] - U[:, 1]
            lap[:, -1] = U[:, -1] - U[:, -2]
            if n > 2:
                lap[:, 1:-1] = 2.0 * U[:, 1:-1] - U[:, :-2] - U[:, 2:]
        if m > 1:
            lap[0, :] += U[0, :] - U[1, :]
            lap[-1, :] += U[-1, :] - U[-2, :]
            if m > 2:
                lap[1:-1, :] += 2.0 * U[1:-1, :] - U[:-2, :] - U[2:, :]
        diag = self.lam * float(self.include_identity) + self.alpha
        return self.lam * lap.ravel(order="F") + diag * u

    def apply_composed(self, u) -> np.ndarray:
        """Reference evaluation of ``A @ u`` via the difference operators."""
        u = _as_vector(u, self.size)
        dx: DiffOperator = self._dx  # type: ignore[attr-defined]
        dy: DiffOperator = self._dy  # type: ignore[attr-defined]
        out = dx.apply_transpose(dx.apply(u)) + dy.apply_transpose(dy.apply(u))
        if self.include_identity:
            out += u
        return self.lam * out + self.alpha * u


def solve_u(
    sys: USystem,
    r,
    tol: float = 1e-8,
    max_iter: int | None = None,
    warm_start=None,
) -> np.ndarray:
    """Solve ``A u = r`` by conjugate gradients.

    Returns ``u`` with relative residual ``||A u - r|| / max(||r||, tiny)``
    at most ``tol``.  Raises :class:`SolverError` (carrying the final
    relative residual) when ``max_iter`` iterations are exhausted first;
    the caller decides whether to abort or accept.
    """
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    r = _as_vector(r, sys.size)
    if max_iter is None:
        max_iter = 10 * sys.size
    if max_iter < 1:
        raise ValueError(f"max_iter must be positive, got {max_iter!r}")

    ref = max(float(np.linalg.norm(r)), float(np.finfo(float).tiny))
    if warm_start is not None:
        x = _as_vector(warm_start, sys.size).copy()
        res = r - sys.apply(x)
    else:
        x = np.zeros_like(r)
        res = r.copy()
    p = res.copy()
    rs = float(res @ res)

    iterations = 0
    for _ in range(max_iter):
        if np.sqrt(rs) <= tol * ref:
            # The recursive residual can drift; confirm against the true one
            # and restart from the current iterate if it disagrees.
            true_res = r - sys.apply(x)
            if float(np.linalg.norm(true_res)) <= tol * ref:
                return x
            res = true_res
            p = res.copy()
            rs = float(res @ res)
        Ap = sys.apply(p)
        pAp = float(p @ Ap)
        if pAp <= 0.0:
            raise SolverError(
                "conjugate gradients lost positive definiteness "
                f"(p^T A p = {pAp})",
                residual=float(np.linalg.norm(r - sys.apply(x))) / ref,
                iterations=iterations,
            )
        step = rs / pAp
        x = x + step * p
        res = res - step * Ap
        rs_new = float(res @ res)
        p = res + (rs_new / rs) * p
        rs = rs_new
        iterations += 1

    final = float(np.linalg.norm(r - sys.apply(x)))
    if final <= tol * ref:
        return x
    raise SolverError(
        f"conjugate gradients did not converge in {max_iter} iterations "
        f"(relative residual {final / ref:.3e} > tol {tol:.3e})",
        residual=final / ref,
        iterations=iterations,
    )
