"""Watch the split Bregman iteration converge.

The three splitting residuals must vanish, the step norm must shrink, and
the Bregman vectors never leave the box dictated by the shrinkage
thresholds (mu/(2*lambda) for the residual split, 1/(2*lambda) for the
gradient splits).
"""
import numpy as np

from tvdenoise import ModelKind, ModelSpec, NoiseKind, NoiseSpec, SolverConfig
from tvdenoise import add_noise, denoise
from tvdenoise.phantoms import mosaic

truth = mosaic(64, tiles=8)
noisy = add_noise(truth, NoiseSpec(NoiseKind.GAUSSIAN, 25.0, seed=31))
model = ModelSpec(ModelKind.MIXED_NORM, mu=1.0, alpha=0.01, lam=1.0)
result = denoise(
    noisy, model, SolverConfig(epsilon=1e-8, max_outer=3000, record_diagnostics=True)
)

print(f"stopped by {result.stop_reason.value} after {result.iterations} iterations")
print(f"Bregman boxes: |b1| <= {model.mu / (2 * model.lam)}, "
      f"|b2|, |b3| <= {1 / (2 * model.lam)}")
print(f"{'iter':>6} {'step':>10} {'resid d':>10} {'resid x':>10} "
      f"{'resid y':>10} {'objective':>14} {'b1_inf':>7} {'b2_inf':>7}")
marks = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 2000, result.iterations}
for diag in result.diagnostics:
    if diag.k in marks:
        print(
            f"{diag.k:>6} {diag.step_norm:>10.2e} {diag.residual_d:>10.2e} "
            f"{diag.residual_x:>10.2e} {diag.residual_y:>10.2e} "
            f"{diag.objective:>14.4f} {diag.b1_inf:>7.4f} {diag.b2_inf:>7.4f}"
        )

worst_b1 = max(d.b1_inf for d in result.diagnostics)
worst_b2 = max(max(d.b2_inf, d.b3_inf) for d in result.diagnostics)
print(f"\nlargest |b1| seen: {worst_b1:.6f}, largest |b2|,|b3|: {worst_b2:.6f}")
print("objective decreased by",
      result.diagnostics[0].objective - result.diagnostics[-1].objective)
assert np.all(np.isfinite([d.objective for d in result.diagnostics]))
