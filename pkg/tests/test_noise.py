"""Noise synthesis: determinism, distributions, and chain ordering."""
import numpy as np
import pytest

from tvdenoise.image import Image
from tvdenoise.noise import NoiseKind, NoiseSpec, add_noise, add_noise_chain


def constant_image(value=128.0, size=256):
    return Image.from_array(np.full((size, size), value))


def test_gaussian_zero_sigma_is_identity():
    img = constant_image(100.0, 16)
    out = add_noise(img, NoiseSpec(NoiseKind.GAUSSIAN, 0.0, seed=1))
    assert np.array_equal(out.pixels, img.pixels)


def test_salt_pepper_full_density_saturates():
    img = constant_image(100.0, 32)
    out = add_noise(img, NoiseSpec(NoiseKind.SALT_PEPPER, 1.0, seed=2))
    assert np.all((out.pixels == 0.0) | (out.pixels == 255.0))


def test_gaussian_sample_statistics():
    img = constant_image(128.0, 256)
    out = add_noise(img, NoiseSpec(NoiseKind.GAUSSIAN, 25.0, seed=31415))
    diff = out.pixels - img.pixels
    assert abs(diff.mean()) <= 0.5
    assert abs(diff.std() - 25.0) <= 1.0


def test_salt_pepper_corrupted_fraction():
    img = constant_image(128.0, 256)
    density = 0.05
    out = add_noise(img, NoiseSpec(NoiseKind.SALT_PEPPER, density, seed=2718))
    frac = np.mean(out.pixels != 128.0)
    sd = np.sqrt(density * (1.0 - density) / img.pixels.size)
    assert abs(frac - density) <= 3.0 * sd


def test_poisson_variance():
    img = constant_image(128.0, 256)
    out = add_noise(img, NoiseSpec(NoiseKind.POISSON, 1.0, seed=999))
    assert abs(out.pixels.var() - 128.0) <= 12.8


def test_poisson_scale_changes_variance():
    img = constant_image(128.0, 256)
    out = add_noise(img, NoiseSpec(NoiseKind.POISSON, 0.25, seed=999))
    assert abs(out.pixels.var() - 512.0) <= 51.2


def test_poisson_handles_negative_intensities():
    img = Image.from_array(np.array([[-5.0, 10.0]]))
    out = add_noise(img, NoiseSpec(NoiseKind.POISSON, 1.0, seed=4))
    assert out.pixels[0] == 0.0  # zero photon rate for negative input


def test_speckle_zero_sigma_is_identity():
    img = constant_image(77.0, 8)
    out = add_noise(img, NoiseSpec(NoiseKind.SPECKLE, 0.0, seed=5))
    assert np.array_equal(out.pixels, img.pixels)


def test_uniform_bounded_by_half_width():
    img = constant_image(100.0, 64)
    out = add_noise(img, NoiseSpec(NoiseKind.UNIFORM, 50.0, seed=6))
    diff = out.pixels - img.pixels
    assert np.all(np.abs(diff) <= 50.0)
    assert diff.std() > 20.0  # actually spread out


def test_no_clamping_of_output():
    img = constant_image(250.0, 64)
    out = add_noise(img, NoiseSpec(NoiseKind.GAUSSIAN, 30.0, seed=7))
    assert out.pixels.max() > 255.0


def test_reproducibility_bitwise():
    rng = np.random.default_rng(8)
    img = Image.from_array(rng.uniform(0.0, 255.0, (32, 32)))
    for kind, param in [
        (NoiseKind.GAUSSIAN, 25.0),
        (NoiseKind.SALT_PEPPER, 0.05),
        (NoiseKind.POISSON, 1.0),
        (NoiseKind.SPECKLE, 0.2),
        (NoiseKind.UNIFORM, 50.0),
    ]:
        spec = NoiseSpec(kind, param, seed=12345)
        a = add_noise(img, spec)
        b = add_noise(img, spec)
        assert np.array_equal(a.pixels, b.pixels)


def test_different_seeds_differ():
    img = constant_image(128.0, 32)
    a = add_noise(img, NoiseSpec(NoiseKind.GAUSSIAN, 25.0, seed=1))
    b = add_noise(img, NoiseSpec(NoiseKind.GAUSSIAN, 25.0, seed=2))
    assert not np.array_equal(a.pixels, b.pixels)


def test_spec_validation():
    with pytest.raises(ValueError):
        NoiseSpec(NoiseKind.SALT_PEPPER, 1.5, seed=0)
    with pytest.raises(ValueError):
        NoiseSpec(NoiseKind.GAUSSIAN, -1.0, seed=0)
    with pytest.raises(ValueError):
        NoiseSpec(NoiseKind.POISSON, 0.0, seed=0)


def test_spec_round_trips_through_dict():
    spec = NoiseSpec(NoiseKind.UNIFORM, 50.0, seed=99)
    data = spec.to_dict()
    assert data == {"kind": "uniform", "half_width": 50.0, "seed": 99}
    assert NoiseSpec.from_dict(data) == spec
    override = NoiseSpec.from_dict({"kind": "gaussian", "sigma": 25.0}, seed=7)
    assert override == NoiseSpec(NoiseKind.GAUSSIAN, 25.0, seed=7)


def test_chain_single_element_matches_add_noise():
    img = constant_image(90.0, 16)
    spec = NoiseSpec(NoiseKind.GAUSSIAN, 10.0, seed=11)
    assert np.array_equal(
        add_noise_chain(img, [spec]).pixels, add_noise(img, spec).pixels
    )


def test_chain_of_full_density_salt_pepper_stays_binary():
    img = constant_image(90.0, 16)
    out = add_noise_chain(
        img,
        [
            NoiseSpec(NoiseKind.SALT_PEPPER, 1.0, seed=21),
            NoiseSpec(NoiseKind.SALT_PEPPER, 1.0, seed=22),
        ],
    )
    assert np.all((out.pixels == 0.0) | (out.pixels == 255.0))


def test_chain_order_matters():
    img = constant_image(128.0, 64)
    gauss = NoiseSpec(NoiseKind.GAUSSIAN, 25.0, seed=31)
    sp = NoiseSpec(NoiseKind.SALT_PEPPER, 0.05, seed=32)
    gauss_then_sp = add_noise_chain(img, [gauss, sp])
    sp_then_gauss = add_noise_chain(img, [sp, gauss])
    assert not np.array_equal(gauss_then_sp.pixels, sp_then_gauss.pixels)
    # With salt & pepper last, its pixels sit exactly at 0 or 255.
    draws = np.random.default_rng(32).random(img.pixels.size)
    hit = draws < 0.05
    assert np.all(np.isin(gauss_then_sp.pixels[hit], (0.0, 255.0)))
    # With gaussian last, those same positions moved off the rails.
    assert not np.all(np.isin(sp_then_gauss.pixels[hit], (0.0, 255.0)))


def test_chain_rejects_empty():
    with pytest.raises(ValueError):
        add_noise_chain(constant_image(1.0, 4), [])
