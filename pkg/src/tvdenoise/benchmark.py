"""Benchmark harness: noise grid x model grid -> CSV and per-image tables.

A run is fully determined by its config file and master seed.  Every
(image, chain) cell derives its own 64-bit seed by hashing
``master seed | image name | chain name`` (SHA-256, first 8 bytes,
little-endian), and each noise step in the chain appends its position, so
any cell can be reproduced in isolation.

The CSV records, per cell, the similarity metrics of the raw solver output
and, labeled separately, of the [0, 255]-clamped export.  Wall time sits in
the last column so determinism comparisons can simply drop it.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import time
from dataclasses import dataclass
from pathlib import Path

from .image import Image
from .linsolve import SolverError
from .metrics import mse, pps, psnr, ssim
from .noise import NoiseKind, NoiseSpec, PARAM_NAMES, add_noise_chain
from .pgm import clamp_for_export, read_image
from .solver import (
    ModelKind,
    ModelSpec,
    NumericalError,
    SolverConfig,
    denoise,
)

__all__ = [
    "NoiseStep",
    "NoiseChainSpec",
    "ModelColumn",
    "BenchmarkConfig",
    "PpsReport",
    "stable_seed",
    "shrink_to",
    "load_benchmark_config",
    "run_benchmark",
    "write_reports_csv",
    "format_table",
    "run_benchmark_to_dir",
]

NOISY_COLUMN = "noisy"

_METRIC_FIELDS = (
    "mse",
    "psnr",
    "ssim",
    "pps",
    "mse_clamped",
    "psnr_clamped",
    "ssim_clamped",
    "pps_clamped",
)
CSV_COLUMNS = ("image", "chain", "model") + _METRIC_FIELDS + (
    "iterations",
    "error",
    "wall_time_s",
)


@dataclass(frozen=True)
class NoiseStep:
    """One noise application inside a chain (seed assigned per cell)."""

    kind: NoiseKind
    param: float


@dataclass(frozen=True)
class NoiseChainSpec:
    name: str
    steps: tuple[NoiseStep, ...]

    def __post_init__(self):
        if len(self.steps) < 1:
            raise ValueError(f"noise chain {self.name!r} has no steps")


@dataclass(frozen=True)
class ModelColumn:
    """A named model column: one denoiser or a pipeline of them."""

    name: str
    stages: tuple[ModelSpec, ...]

    def __post_init__(self):
        if len(self.stages) < 1:
            raise ValueError(f"model column {self.name!r} has no stages")


@dataclass(frozen=True)
class BenchmarkConfig:
    images: tuple[Path, ...]
    chains: tuple[NoiseChainSpec, ...]
    models: tuple[ModelColumn, ...]
    solver: SolverConfig
    seed: int
    output: Path
    crop: int | None = 64

    def __post_init__(self):
        if not self.images:
            raise ValueError("config lists no images")
        if not self.chains:
            raise ValueError("config lists no noise chains")
        if not self.models:
            raise ValueError("config lists no models")


@dataclass
class PpsReport:
    """One benchmark cell: metrics of a (image, chain, model) combination."""

    image: str
    chain: str
    model: str
    mse: float = math.nan
    psnr: float = math.nan
    ssim: float = math.nan
    pps: float = math.nan
    mse_clamped: float = math.nan
    psnr_clamped: float = math.nan
    ssim_clamped: float = math.nan
    pps_clamped: float = math.nan
    iterations: int = 0
    error: str = ""
    wall_time_s: float = 0.0


def stable_seed(*parts) -> int:
    """64-bit seed from a SHA-256 hash of the stringified parts."""
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def shrink_to(image: Image, size: int) -> Image:
    """Center-crop to a multiple of ``size`` and box-average down to it.

    Images not larger than the target are returned unchanged.  When one
    dimension is already below the target, only the center crop applies
    (the result then keeps that smaller extent).
    """
    if size < 1:
        raise ValueError(f"target size must be positive, got {size}")
    arr = image.to_array()
    m, n = arr.shape
    if m <= size and n <= size:
        return image
    factor = min(m // size, n // size)
    if factor < 1:
        mm, nn = min(m, size), min(n, size)
        top, left = (m - mm) // 2, (n - nn) // 2
        return Image.from_array(arr[top : top + mm, left : left + nn])
    mm, nn = size * factor, size * factor
    top, left = (m - mm) // 2, (n - nn) // 2
    crop = arr[top : top + mm, left : left + nn]
    pooled = crop.reshape(size, factor, size, factor).mean(axis=(1, 3))
    return Image.from_array(pooled)


def _parse_model_spec(data: dict) -> ModelSpec:
    kind = ModelKind(data["kind"])
    return ModelSpec(
        kind,
        mu=float(data.get("mu", 0.0)),
        alpha=float(data.get("alpha", 0.0)),
        lam=float(data.get("lambda", 1.0)),
    )


def _parse_noise_step(data: dict) -> NoiseStep:
    kind = NoiseKind(data["kind"])
    return NoiseStep(kind, float(data[PARAM_NAMES[kind]]))


def load_benchmark_config(path) -> BenchmarkConfig:
    """Parse a JSON benchmark config; relative paths resolve against it."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise ValueError(f"{path}: invalid config JSON: {err}") from err
    base = path.parent
    try:
        images = tuple(
            p if (p := Path(entry)).is_absolute() else base / p
            for entry in data["images"]
        )
        chains = tuple(
            NoiseChainSpec(
                entry["name"], tuple(_parse_noise_step(s) for s in entry["steps"])
            )
            for entry in data["noise_chains"]
        )
        models = tuple(
            ModelColumn(
                entry["name"], tuple(_parse_model_spec(s) for s in entry["stages"])
            )
            for entry in data["models"]
        )
        solver_data = data.get("solver", {})
        solver = SolverConfig(
            epsilon=solver_data.get("epsilon"),
            max_outer=int(solver_data.get("max_outer", 500)),
            inner_tol=float(solver_data.get("inner_tol", 1e-8)),
            record_diagnostics=False,
        )
        out = Path(data.get("output", "bench_out"))
        if not out.is_absolute():
            out = base / out
        return BenchmarkConfig(
            images=images,
            chains=chains,
            models=models,
            solver=solver,
            seed=int(data["seed"]),
            output=out,
            crop=data.get("crop", 64),
        )
    except (KeyError, TypeError) as err:
        raise ValueError(f"{path}: malformed config: {err}") from err


def _chain_noise_specs(
    chain: NoiseChainSpec, master_seed: int, image_name: str
) -> list[NoiseSpec]:
    return [
        NoiseSpec(
            step.kind,
            step.param,
            seed=stable_seed(master_seed, image_name, chain.name, idx),
        )
        for idx, step in enumerate(chain.steps)
    ]


def _metric_block(report: PpsReport, out: Image, truth: Image) -> None:
    report.mse = mse(out, truth)
    report.psnr = psnr(out, truth)
    report.ssim = ssim(out, truth)
    report.pps = pps(out, truth)
    clamped = Image.from_array(clamp_for_export(out).astype(float))
    report.mse_clamped = mse(clamped, truth)
    report.psnr_clamped = psnr(clamped, truth)
    report.ssim_clamped = ssim(clamped, truth)
    report.pps_clamped = pps(clamped, truth)


def run_benchmark(config: BenchmarkConfig, progress=None) -> list[PpsReport]:
    """Run the full grid; per-cell failures are recorded, not raised."""
    reports: list[PpsReport] = []
    for image_path in config.images:
        truth = read_image(image_path)
        if config.crop:
            truth = shrink_to(truth, config.crop)
        image_name = image_path.stem
        for chain in config.chains:
            specs = _chain_noise_specs(chain, config.seed, image_name)
            noisy = add_noise_chain(truth, specs)

            baseline = PpsReport(image_name, chain.name, NOISY_COLUMN)
            _metric_block(baseline, noisy, truth)
            reports.append(baseline)

            for column in config.models:
                report = PpsReport(image_name, chain.name, column.name)
                start = time.perf_counter()
                try:
                    current = noisy
                    iterations = 0
                    for spec in column.stages:
                        result = denoise(current, spec, config.solver)
                        current = result.image
                        iterations += result.iterations
                    report.iterations = iterations
                    _metric_block(report, current, truth)
                except (SolverError, NumericalError) as err:
                    report.error = str(err)
                report.wall_time_s = time.perf_counter() - start
                reports.append(report)
                if progress is not None:
                    progress(report)
    return reports


def _format_cell(value: float) -> str:
    if isinstance(value, float) and math.isnan(value):
        return ""
    return repr(float(value))


def write_reports_csv(reports: list[PpsReport], path) -> None:
    """Write reports as UTF-8 CSV with LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [r.image, r.chain, r.model]
            + [_format_cell(getattr(r, name)) for name in _METRIC_FIELDS]
            + [r.iterations, r.error, repr(r.wall_time_s)]
        )
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def format_table(reports: list[PpsReport], image_name: str) -> str:
    """Per-image text table of PPS scores, best model per row starred."""
    rows = [r for r in reports if r.image == image_name]
    chains: list[str] = []
    models: list[str] = []
    for r in rows:
        if r.chain not in chains:
            chains.append(r.chain)
        if r.model != NOISY_COLUMN and r.model not in models:
            models.append(r.model)
    by_key = {(r.chain, r.model): r for r in rows}

    def cell(chain: str, model: str) -> str:
        r = by_key.get((chain, model))
        if r is None or r.error:
            return "err"
        if math.isinf(r.pps):
            return "inf"
        return f"{r.pps:.2f}"

    header = ["noise chain", NOISY_COLUMN] + models
    width0 = max(len(header[0]), *(len(c) for c in chains))
    widths = [max(10, len(h) + 2) for h in header[1:]]
    lines = [f"PPS scores: {image_name}"]
    lines.append(
        "  ".join([header[0].ljust(width0)] + [h.rjust(w) for h, w in zip(header[1:], widths)])
    )
    lines.append("-" * (width0 + sum(widths) + 2 * len(widths)))
    for chain in chains:
        best = None
        best_val = -math.inf
        for model in models:
            r = by_key.get((chain, model))
            if r is not None and not r.error and r.pps > best_val:
                best_val = r.pps
                best = model
        cells = [chain.ljust(width0), cell(chain, NOISY_COLUMN).rjust(widths[0])]
        for model, w in zip(models, widths[1:]):
            text = cell(chain, model)
            if model == best:
                text = "*" + text
            cells.append(text.rjust(w))
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"


def run_benchmark_to_dir(config: BenchmarkConfig, progress=None) -> tuple[list[PpsReport], int]:
    """Run the grid and write ``benchmark.csv`` plus one table per image.

    Returns the reports and the number of failed cells.
    """
    config.output.mkdir(parents=True, exist_ok=True)
    reports = run_benchmark(config, progress=progress)
    write_reports_csv(reports, config.output / "benchmark.csv")
    for image_path in config.images:
        name = image_path.stem
        (config.output / f"table_{name}.txt").write_text(
            format_table(reports, name), encoding="utf-8"
        )
    failures = sum(1 for r in reports if r.error)
    return reports, failures
