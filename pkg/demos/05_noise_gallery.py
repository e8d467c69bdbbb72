"""Generate the full noise taxonomy: five single types, twenty chains.

Writes every corrupted image to demos/out/noise/ and prints how far each
chain drags the PPS score down.  Chain order matters: gaussian-then-s&p
leaves clean impulses, s&p-then-gaussian smears them.
"""
from pathlib import Path

from tvdenoise import NoiseKind, NoiseSpec, add_noise_chain, pps, write_pgm
from tvdenoise.benchmark import stable_seed
from tvdenoise.phantoms import photo

out_dir = Path(__file__).resolve().parent / "out" / "noise"
out_dir.mkdir(parents=True, exist_ok=True)

truth = photo(128)
LEVEL = {
    "gaussian": (NoiseKind.GAUSSIAN, 25.0),
    "s&p": (NoiseKind.SALT_PEPPER, 0.05),
    "poisson": (NoiseKind.POISSON, 1.0),
    "speckle": (NoiseKind.SPECKLE, 0.2),
    "uniform": (NoiseKind.UNIFORM, 50.0),
}
names = list(LEVEL)
chains = [[n] for n in names]
chains += [[a, b] for a in names for b in names if a != b]

seed = 2024
for chain in chains:
    label = "+".join(chain)
    specs = [
        NoiseSpec(*LEVEL[name], seed=stable_seed(seed, label, i))
        for i, name in enumerate(chain)
    ]
    noisy = add_noise_chain(truth, specs)
    fname = label.replace("&", "").replace("+", "_")
    write_pgm(out_dir / f"{fname}.pgm", noisy)
    print(f"{label:20s} PPS vs truth = {pps(noisy, truth):6.2f}")

print(f"\nwrote {len(chains)} images to {out_dir}")
