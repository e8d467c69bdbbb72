"""Run a reduced benchmark grid through the library API.

Two images, four noise chains, three model columns: enough to show the
CSV/table machinery without the half-hour full grid (for that, run
`tvdenoise benchmark --config configs/benchmark_default.json`).
"""
from pathlib import Path

from tvdenoise.benchmark import (
    BenchmarkConfig,
    ModelColumn,
    NoiseChainSpec,
    NoiseStep,
    format_table,
    run_benchmark_to_dir,
)
from tvdenoise.noise import NoiseKind
from tvdenoise.pgm import write_pgm
from tvdenoise.phantoms import photo, portrait
from tvdenoise.solver import ModelKind, ModelSpec, SolverConfig

base = Path(__file__).resolve().parent / "out" / "mini_bench"
base.mkdir(parents=True, exist_ok=True)
for name, image in (("photo", photo(128)), ("portrait", portrait(128))):
    write_pgm(base / f"{name}.pgm", image)

gauss = NoiseStep(NoiseKind.GAUSSIAN, 25.0)
sp = NoiseStep(NoiseKind.SALT_PEPPER, 0.05)
config = BenchmarkConfig(
    images=(base / "photo.pgm", base / "portrait.pgm"),
    chains=(
        NoiseChainSpec("gaussian", (gauss,)),
        NoiseChainSpec("s&p", (sp,)),
        NoiseChainSpec("gaussian+s&p", (gauss, sp)),
        NoiseChainSpec("s&p+gaussian", (sp, gauss)),
    ),
    models=(
        ModelColumn("1-norm", (ModelSpec(ModelKind.ONE_NORM, mu=1.4, lam=1.0),)),
        ModelColumn("isotropic", (ModelSpec(ModelKind.ISOTROPIC, alpha=0.05, lam=1.0),)),
        ModelColumn("mixed-norm", (ModelSpec(ModelKind.MIXED_NORM, mu=1.0, alpha=0.01, lam=1.0),)),
    ),
    solver=SolverConfig(record_diagnostics=False),
    seed=20240501,
    output=base / "results",
    crop=64,
)

reports, failures = run_benchmark_to_dir(config)
print(f"{len(reports)} cells, {failures} failures -> {config.output}")
print()
print(format_table(reports, "photo"))
print(format_table(reports, "portrait"))
