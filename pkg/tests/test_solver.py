"""Split Bregman solver: fixed points, objectives, convergence theory checks."""
import numpy as np
import pytest

from tvdenoise.image import Image
from tvdenoise.linsolve import SolverError
from tvdenoise.solver import (
    ModelKind,
    ModelSpec,
    SolverConfig,
    StopReason,
    _run_split_bregman,
    denoise,
    denoise_pipeline,
    objective_value,
)

MIXED = ModelSpec(ModelKind.MIXED_NORM, mu=0.5, alpha=0.05, lam=1.0)


def test_model_spec_validation():
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.MIXED_NORM, mu=0.0, alpha=0.1)
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.MIXED_NORM, mu=0.1, alpha=0.0)
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.ONE_NORM, mu=1.0, alpha=0.2)
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.ANISOTROPIC, mu=0.5, alpha=0.5)
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.ISOTROPIC, mu=0.0, alpha=0.0)
    with pytest.raises(ValueError):
        ModelSpec(ModelKind.MIXED_NORM, mu=1.0, alpha=1.0, lam=0.0)


def test_constant_image_is_fixed_point():
    img = Image.from_array(np.full((6, 5), 100.0))
    res = denoise(img, MIXED, SolverConfig(epsilon=1e-8, max_outer=50))
    assert np.array_equal(res.image.pixels, img.pixels)
    assert res.stop_reason is StopReason.TOLERANCE
    assert res.iterations == 1


def test_single_pixel_image_returns_input():
    img = Image.from_array([[42.0]])
    res = denoise(img, MIXED, SolverConfig(epsilon=1e-12, max_outer=200))
    np.testing.assert_allclose(res.image.pixels, [42.0], atol=1e-9)


def test_objective_constant_at_truth_is_zero():
    f = np.full(12, 9.0)
    for kind, kw in [
        (ModelKind.MIXED_NORM, dict(mu=1.0, alpha=1.0)),
        (ModelKind.ONE_NORM, dict(mu=1.0)),
        (ModelKind.ANISOTROPIC, dict(alpha=1.0)),
        (ModelKind.ISOTROPIC, dict(alpha=1.0)),
    ]:
        model = ModelSpec(kind, lam=1.0, **kw)
        assert objective_value(f, f, 3, 4, model) == 0.0


def test_objective_hand_computed():
    # 1x2 grid: horizontal difference 3, mu-term 3, alpha-term 9.
    model = ModelSpec(ModelKind.MIXED_NORM, mu=1.0, alpha=1.0, lam=1.0)
    u = np.array([0.0, 3.0])
    f = np.array([0.0, 0.0])
    assert objective_value(u, f, 1, 2, model) == 15.0


def test_isotropic_objective_below_anisotropic():
    rng = np.random.default_rng(61)
    u = rng.uniform(0.0, 255.0, 16)
    f = rng.uniform(0.0, 255.0, 16)
    iso = ModelSpec(ModelKind.ISOTROPIC, alpha=0.3, lam=1.0)
    aniso = ModelSpec(ModelKind.ANISOTROPIC, alpha=0.3, lam=1.0)
    assert objective_value(u, f, 4, 4, iso) <= objective_value(u, f, 4, 4, aniso)


def test_objective_dimension_mismatch():
    model = ModelSpec(ModelKind.ONE_NORM, mu=1.0)
    with pytest.raises(ValueError):
        objective_value(np.zeros(4), np.zeros(5), 2, 2, model)


def test_bregman_bounds_hold_every_iteration():
    # Dyadic thresholds (lam = 1, mu = 0.5) make the cut-function bound exact.
    rng = np.random.default_rng(5)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    res = denoise(img, MIXED, SolverConfig(epsilon=1e-10, max_outer=2500))
    gamma_d = MIXED.mu / (2.0 * MIXED.lam)
    gamma_xy = 1.0 / (2.0 * MIXED.lam)
    for diag in res.diagnostics:
        assert diag.b1_inf <= gamma_d
        assert diag.b2_inf <= gamma_xy
        assert diag.b3_inf <= gamma_xy


def test_bregman_bounds_non_dyadic_within_rounding():
    # A non-dyadic threshold leaves the bound exact only up to the rounding
    # of |v| - gamma, so allow a relative 1e-12 margin.
    rng = np.random.default_rng(6)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    model = ModelSpec(ModelKind.MIXED_NORM, mu=0.3, alpha=0.05, lam=0.7)
    res = denoise(img, model, SolverConfig(epsilon=1e-10, max_outer=2500))
    gamma_d = model.mu / (2.0 * model.lam)
    gamma_xy = 1.0 / (2.0 * model.lam)
    slack = 1.0 + 1e-12
    for diag in res.diagnostics:
        assert diag.b1_inf <= gamma_d * slack
        assert diag.b2_inf <= gamma_xy * slack
        assert diag.b3_inf <= gamma_xy * slack


def test_constraint_residuals_vanish():
    rng = np.random.default_rng(8)
    img = Image.from_array(rng.uniform(0.0, 255.0, (16, 16)))
    res = denoise(
        img,
        ModelSpec(ModelKind.MIXED_NORM, mu=1.0, alpha=0.01, lam=1.0),
        SolverConfig(epsilon=1e-10, max_outer=5000),
    )
    final = res.diagnostics[-1]
    assert final.residual_d <= 1e-6
    assert final.residual_x <= 1e-6
    assert final.residual_y <= 1e-6


def test_step_norm_at_tolerance_stop():
    rng = np.random.default_rng(10)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    eps = 1e-6
    res = denoise(img, MIXED, SolverConfig(epsilon=eps, max_outer=5000))
    assert res.stop_reason is StopReason.TOLERANCE
    assert res.diagnostics[-1].step_norm <= eps


def test_iteration_cap_stop_reason():
    rng = np.random.default_rng(12)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    res = denoise(img, MIXED, SolverConfig(epsilon=1e-14, max_outer=3))
    assert res.stop_reason is StopReason.ITERATION_CAP
    assert res.iterations == 3
    assert len(res.diagnostics) == 3


def test_local_optimality_probe():
    rng = np.random.default_rng(77)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    res = denoise(img, MIXED, SolverConfig(epsilon=1e-10, max_outer=3000))
    u = res.image.pixels
    base = objective_value(u, img.pixels, 8, 8, MIXED)
    for _ in range(100):
        i = int(rng.integers(0, u.size))
        delta = float(rng.choice([0.5, -0.5, 0.05, -0.05]))
        probe = u.copy()
        probe[i] += delta
        assert objective_value(probe, img.pixels, 8, 8, MIXED) >= base - 1e-6


def test_anisotropic_equals_mixed_mu_zero_path():
    rng = np.random.default_rng(77)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    aniso = ModelSpec(ModelKind.ANISOTROPIC, alpha=0.05, lam=1.0)
    cfg = SolverConfig(epsilon=1e-13, max_outer=20000, inner_tol=1e-13)
    direct = denoise(img, aniso, cfg)
    via_mixed = _run_split_bregman(
        img, aniso, cfg, mu=0.0, split_residual=True, paired=False
    )
    gap = np.max(np.abs(direct.image.pixels - via_mixed.image.pixels))
    assert gap <= 1e-8


def test_determinism():
    rng = np.random.default_rng(14)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    cfg = SolverConfig(epsilon=1e-8, max_outer=500)
    a = denoise(img, MIXED, cfg)
    b = denoise(img, MIXED, cfg)
    assert np.array_equal(a.image.pixels, b.image.pixels)
    assert a.iterations == b.iterations


def test_all_four_models_reduce_objective_of_noisy_input():
    rng = np.random.default_rng(16)
    truth = np.full((8, 8), 120.0)
    noisy = truth + rng.normal(0.0, 30.0, truth.shape)
    img = Image.from_array(noisy)
    for model in [
        ModelSpec(ModelKind.ONE_NORM, mu=0.8, lam=1.0),
        ModelSpec(ModelKind.ANISOTROPIC, alpha=0.05, lam=1.0),
        ModelSpec(ModelKind.ISOTROPIC, alpha=0.05, lam=1.0),
        MIXED,
    ]:
        res = denoise(img, model, SolverConfig(epsilon=1e-8, max_outer=2000))
        out = res.image.pixels
        before = objective_value(img.pixels, img.pixels, 8, 8, model)
        after = objective_value(out, img.pixels, 8, 8, model)
        assert after < before
        # A TV-denoised pure-noise image should be visibly flatter.
        assert np.std(out) < np.std(img.pixels)


def test_inner_solver_failure_propagates():
    rng = np.random.default_rng(18)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    cfg = SolverConfig(epsilon=1e-8, max_outer=10, inner_tol=1e-15, inner_max_iter=1)
    with pytest.raises(SolverError, match="outer iteration"):
        denoise(img, MIXED, cfg)


def test_pipeline_single_stage_matches_denoise():
    rng = np.random.default_rng(20)
    img = Image.from_array(rng.uniform(0.0, 255.0, (8, 8)))
    cfg = SolverConfig(epsilon=1e-8, max_outer=500)
    direct = denoise(img, MIXED, cfg).image
    piped = denoise_pipeline(img, [(MIXED, cfg)])
    assert np.array_equal(direct.pixels, piped.pixels)


def test_pipeline_constant_image_fixed_point():
    img = Image.from_array(np.full((5, 5), 77.0))
    cfg = SolverConfig(epsilon=1e-8, max_outer=100)
    stages = [
        (ModelSpec(ModelKind.ONE_NORM, mu=1.0, lam=1.0), cfg),
        (ModelSpec(ModelKind.ISOTROPIC, alpha=0.1, lam=1.0), cfg),
    ]
    out = denoise_pipeline(img, stages)
    assert np.array_equal(out.pixels, img.pixels)


def test_pipeline_rejects_empty():
    img = Image.from_array(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        denoise_pipeline(img, [])


def test_pipeline_order_matters():
    from tvdenoise.noise import NoiseKind, NoiseSpec, add_noise_chain

    rng = np.random.default_rng(22)
    truth = Image.from_array(
        np.kron(rng.uniform(40.0, 220.0, (4, 4)), np.ones((16, 16)))
    )
    noisy = add_noise_chain(
        truth,
        [
            NoiseSpec(NoiseKind.SALT_PEPPER, 0.08, seed=101),
            NoiseSpec(NoiseKind.GAUSSIAN, 20.0, seed=102),
        ],
    )
    cfg = SolverConfig(epsilon=None, max_outer=300)
    one_norm = ModelSpec(ModelKind.ONE_NORM, mu=1.0, lam=1.0)
    iso = ModelSpec(ModelKind.ISOTROPIC, alpha=0.05, lam=1.0)
    ab = denoise_pipeline(noisy, [(one_norm, cfg), (iso, cfg)])
    ba = denoise_pipeline(noisy, [(iso, cfg), (one_norm, cfg)])
    from tvdenoise.metrics import pps

    assert not np.array_equal(ab.pixels, ba.pixels)
    assert pps(ab, truth) != pps(ba, truth)
