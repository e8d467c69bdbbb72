"""Regenerate the committed benchmark images under images/.

The four scenes are deterministic functions (see tvdenoise.phantoms), so
this script always reproduces the same PGM bytes.
"""
from pathlib import Path

from tvdenoise.pgm import write_pgm
from tvdenoise.phantoms import standard_images

OUT = Path(__file__).resolve().parent.parent / "images"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for name, image in standard_images(256).items():
        path = OUT / f"{name}.pgm"
        write_pgm(path, image)
        print(f"wrote {path} ({image.m}x{image.n})")


if __name__ == "__main__":
    main()
