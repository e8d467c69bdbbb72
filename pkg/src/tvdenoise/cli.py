"""Command-line interface: add-noise, denoise, metrics, and benchmark.

Exit status is 0 on success, 1 on I/O or solver failures (and on benchmark
runs with failed cells), 2 on usage errors.  All randomness flows through
explicit seeds, so rerunning a command reproduces its outputs byte for byte.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .benchmark import (
    load_benchmark_config,
    run_benchmark_to_dir,
    stable_seed,
)
from .image import Image
from .linsolve import SolverError
from .metrics import mse, pps, psnr, ssim
from .noise import NoiseKind, NoiseSpec, add_noise_chain
from .pgm import read_image, write_pgm
from .solver import (
    DEFAULT_LAMBDA,
    ModelKind,
    ModelSpec,
    NumericalError,
    SolverConfig,
    denoise,
)

MODEL_NAMES = {
    "1-norm": ModelKind.ONE_NORM,
    "isotropic": ModelKind.ISOTROPIC,
    "anisotropic": ModelKind.ANISOTROPIC,
    "mixed-norm": ModelKind.MIXED_NORM,
}

# Working defaults per model; benchmark configs carry their own tuned values.
MODEL_DEFAULTS = {
    "1-norm": dict(mu=1.0, alpha=0.0),
    "isotropic": dict(mu=0.0, alpha=0.05),
    "anisotropic": dict(mu=0.0, alpha=0.05),
    "mixed-norm": dict(mu=1.0, alpha=0.05),
}


def parse_noise_chain(text: str, seed: int) -> list[NoiseSpec]:
    """Parse an inline chain like ``gaussian:25+salt_pepper:0.05``.

    Step i draws from a stream seeded by hashing (seed, i).
    """
    specs = []
    for idx, part in enumerate(text.split("+")):
        try:
            kind_name, param = part.split(":")
            kind = NoiseKind(kind_name.strip())
            spec = NoiseSpec(kind, float(param), seed=stable_seed(seed, idx))
        except (ValueError, KeyError) as err:
            valid = ", ".join(k.value for k in NoiseKind)
            raise ValueError(
                f"bad noise step {part!r} ({err}); expected kind:param with "
                f"kind one of {valid}"
            ) from err
        specs.append(spec)
    return specs


def _load(path: str) -> Image:
    return read_image(Path(path))


def _model_from_args(args) -> ModelSpec:
    defaults = MODEL_DEFAULTS[args.model]
    mu = defaults["mu"] if args.mu is None else args.mu
    alpha = defaults["alpha"] if args.alpha is None else args.alpha
    lam = DEFAULT_LAMBDA if args.lam is None else args.lam
    return ModelSpec(MODEL_NAMES[args.model], mu=mu, alpha=alpha, lam=lam)


def cmd_add_noise(args) -> int:
    image = _load(args.input)
    if args.config and args.chain:
        config = load_benchmark_config(Path(args.config))
        matches = [c for c in config.chains if c.name == args.chain]
        if not matches:
            names = ", ".join(c.name for c in config.chains)
            print(
                f"error: chain {args.chain!r} not in config (have: {names})",
                file=sys.stderr,
            )
            return 1
        chain = matches[0]
        specs = [
            NoiseSpec(step.kind, step.param, seed=stable_seed(args.seed, idx))
            for idx, step in enumerate(chain.steps)
        ]
    else:
        specs = parse_noise_chain(args.noise, args.seed)
    noisy = add_noise_chain(image, specs)
    out = Path(args.output)
    write_pgm(out, noisy)
    sidecar = {
        "input": str(args.input),
        "seed": args.seed,
        "chain": [spec.to_dict() for spec in specs],
    }
    out.with_suffix(out.suffix + ".json").write_text(
        json.dumps(sidecar, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"wrote {out} ({len(specs)} noise step(s), seed {args.seed})")
    return 0


def cmd_denoise(args) -> int:
    noisy = _load(args.input)
    model = _model_from_args(args)
    config = SolverConfig(
        epsilon=args.epsilon,
        max_outer=args.max_iter,
        record_diagnostics=False,
    )
    result = denoise(noisy, model, config)
    write_pgm(Path(args.output), result.image)
    print(
        f"wrote {args.output} ({args.model}, {result.iterations} iteration(s), "
        f"stopped by {result.stop_reason.value})"
    )
    if args.truth:
        truth = _load(args.truth)
        out = result.image
        print(
            f"MSE={mse(out, truth):.4f} PSNR={psnr(out, truth):.4f} "
            f"SSIM={ssim(out, truth):.6f} PPS={pps(out, truth):.4f}"
        )
    return 0


def cmd_metrics(args) -> int:
    a = _load(args.image)
    b = _load(args.reference)
    print(
        f"MSE={mse(a, b):.4f} PSNR={psnr(a, b):.4f} "
        f"SSIM={ssim(a, b):.6f} PPS={pps(a, b):.4f}"
    )
    return 0


def cmd_benchmark(args) -> int:
    config = load_benchmark_config(Path(args.config))
    if args.seed is not None:
        config = type(config)(
            images=config.images,
            chains=config.chains,
            models=config.models,
            solver=config.solver,
            seed=args.seed,
            output=config.output,
            crop=config.crop,
        )
    if args.output is not None:
        config = type(config)(
            images=config.images,
            chains=config.chains,
            models=config.models,
            solver=config.solver,
            seed=config.seed,
            output=Path(args.output),
            crop=config.crop,
        )
    verbose_progress = None
    if args.verbose:

        def verbose_progress(report):
            status = report.error or f"pps={report.pps:.2f}"
            print(f"  {report.image} / {report.chain} / {report.model}: {status}")

    reports, failures = run_benchmark_to_dir(config, progress=verbose_progress)
    print(
        f"benchmark: {len(reports)} rows -> {config.output / 'benchmark.csv'}"
        + (f" ({failures} cell(s) failed)" if failures else "")
    )
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tvdenoise",
        description="TV image denoising toolkit: noise synthesis, four TV "
        "models, metrics, and a reproducible benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_noise = sub.add_parser("add-noise", help="corrupt an image with a noise chain")
    p_noise.add_argument("input", help="input PGM/PNG image")
    p_noise.add_argument(
        "--noise",
        default="gaussian:25",
        help="inline chain, e.g. 'gaussian:25+salt_pepper:0.05'",
    )
    p_noise.add_argument("--config", help="benchmark config defining named chains")
    p_noise.add_argument("--chain", help="chain name from --config")
    p_noise.add_argument("--seed", type=int, default=0)
    p_noise.add_argument("--output", required=True, help="output PGM path")
    p_noise.set_defaults(func=cmd_add_noise)

    p_den = sub.add_parser("denoise", help="denoise an image with a TV model")
    p_den.add_argument("input", help="input PGM/PNG image")
    p_den.add_argument(
        "--model",
        choices=sorted(MODEL_NAMES),
        default="mixed-norm",
        help="TV model to run",
    )
    p_den.add_argument("--mu", type=float, default=None, help="1-norm fidelity weight")
    p_den.add_argument(
        "--alpha", type=float, default=None, help="squared 2-norm fidelity weight"
    )
    p_den.add_argument(
        "--lambda",
        dest="lam",
        type=float,
        default=None,
        help="Bregman penalty coefficient",
    )
    p_den.add_argument(
        "--epsilon", type=float, default=None, help="outer stop tolerance"
    )
    p_den.add_argument("--max-iter", type=int, default=500)
    p_den.add_argument("--truth", help="ground-truth image for metric reporting")
    p_den.add_argument("--output", required=True, help="output PGM path")
    p_den.set_defaults(func=cmd_denoise)

    p_met = sub.add_parser("metrics", help="compare two images")
    p_met.add_argument("image")
    p_met.add_argument("reference")
    p_met.set_defaults(func=cmd_metrics)

    p_bench = sub.add_parser("benchmark", help="run the benchmark grid from a config")
    p_bench.add_argument("--config", required=True, help="JSON benchmark config")
    p_bench.add_argument("--seed", type=int, default=None, help="override config seed")
    p_bench.add_argument("--output", default=None, help="override output directory")
    p_bench.add_argument("--verbose", action="store_true", help="print per-cell progress")
    p_bench.set_defaults(func=cmd_benchmark)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, SolverError, NumericalError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
