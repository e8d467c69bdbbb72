"""File I/O: binary PGM (P5) read/write and a minimal read-only PNG decoder.

PGM is the canonical interchange format: 8-bit grayscale, bit-exact, no
dependencies.  PNG files are accepted read-only; color images are converted
to grayscale with luma = 0.299 R + 0.587 G + 0.114 B.  Intensities are
clamped to [0, 255] and rounded only on export.
"""
from __future__ import annotations

import struct
import zlib
from pathlib import Path

import numpy as np

from .image import Image

__all__ = ["read_pgm", "write_pgm", "read_png", "read_image", "clamp_for_export"]

_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"


def clamp_for_export(image: Image) -> np.ndarray:
    """Clamp to [0, 255] and round to uint8 rows-by-columns."""
    arr = image.pixels.reshape((image.m, image.n), order="F")
    return np.rint(np.clip(arr, 0.0, 255.0)).astype(np.uint8)


def _read_pgm_tokens(data: bytes, count: int) -> tuple[list[int], int]:
    """Read ``count`` whitespace/comment-separated integer header tokens."""
    tokens: list[int] = []
    i = 0
    while len(tokens) < count:
        if i >= len(data):
            raise ValueError("truncated PGM header")
        ch = data[i : i + 1]
        if ch in b" \t\r\n":
            i += 1
        elif ch == b"#":
            while i < len(data) and data[i : i + 1] not in b"\r\n":
                i += 1
        else:
            j = i
            while j < len(data) and data[j : j + 1] not in b" \t\r\n":
                j += 1
            tokens.append(int(data[i:j]))
            i = j
    return tokens, i


def read_pgm(path) -> Image:
    """Read an 8-bit binary (P5) PGM file."""
    data = Path(path).read_bytes()
    if data[:2] != b"P5":
        raise ValueError(f"{path}: not a binary PGM (P5) file")
    (width, height, maxval), pos = _read_pgm_tokens(data[2:], 3)
    pos += 2
    if maxval <= 0 or maxval > 255:
        raise ValueError(f"{path}: unsupported PGM maxval {maxval}")
    pos += 1  # single whitespace byte after maxval
    raster = data[pos : pos + width * height]
    if len(raster) != width * height:
        raise ValueError(f"{path}: truncated PGM raster")
    arr = np.frombuffer(raster, dtype=np.uint8).reshape((height, width))
    return Image.from_array(arr.astype(float))


def write_pgm(path, image: Image) -> None:
    """Write an image as 8-bit binary PGM, clamped to [0, 255]."""
    arr = clamp_for_export(image)
    header = f"P5\n{image.n} {image.m}\n255\n".encode("ascii")
    Path(path).write_bytes(header + arr.tobytes())


def _paeth(a: int, b: int, c: int) -> int:
    p = a + b - c
    pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
    if pa <= pb and pa <= pc:
        return a
    if pb <= pc:
        return b
    return c


def _defilter(raw: bytes, height: int, width: int, channels: int) -> np.ndarray:
    stride = width * channels
    out = np.zeros((height, stride), dtype=np.uint8)
    pos = 0
    prior = bytearray(stride)
    for row in range(height):
        ftype = raw[pos]
        pos += 1
        line = bytearray(raw[pos : pos + stride])
        pos += stride
        if ftype == 0:
            pass
        elif ftype == 1:  # Sub
            for i in range(channels, stride):
                line[i] = (line[i] + line[i - channels]) & 0xFF
        elif ftype == 2:  # Up
            for i in range(stride):
                line[i] = (line[i] + prior[i]) & 0xFF
        elif ftype == 3:  # Average
            for i in range(stride):
                left = line[i - channels] if i >= channels else 0
                line[i] = (line[i] + ((left + prior[i]) >> 1)) & 0xFF
        elif ftype == 4:  # Paeth
            for i in range(stride):
                left = line[i - channels] if i >= channels else 0
                upleft = prior[i - channels] if i >= channels else 0
                line[i] = (line[i] + _paeth(left, prior[i], upleft)) & 0xFF
        else:
            raise ValueError(f"unsupported PNG filter type {ftype}")
        out[row] = np.frombuffer(bytes(line), dtype=np.uint8)
        prior = line
    return out


def read_png(path) -> Image:
    """Read an 8-bit non-interlaced PNG (gray, gray+alpha, RGB, or RGBA).

    Color is converted to grayscale by the 0.299/0.587/0.114 luma weights;
    alpha channels are ignored.
    """
    data = Path(path).read_bytes()
    if data[:8] != _PNG_SIGNATURE:
        raise ValueError(f"{path}: not a PNG file")
    pos = 8
    header = None
    idat = bytearray()
    while pos < len(data):
        (length,) = struct.unpack(">I", data[pos : pos + 4])
        ctype = data[pos + 4 : pos + 8]
        body = data[pos + 8 : pos + 8 + length]
        pos += 12 + length
        if ctype == b"IHDR":
            header = struct.unpack(">IIBBBBB", body)
        elif ctype == b"IDAT":
            idat.extend(body)
        elif ctype == b"IEND":
            break
    if header is None:
        raise ValueError(f"{path}: missing IHDR chunk")
    width, height, depth, color, _comp, _filt, interlace = header
    if depth != 8:
        raise ValueError(f"{path}: only 8-bit PNGs are supported (depth {depth})")
    if interlace != 0:
        raise ValueError(f"{path}: interlaced PNGs are not supported")
    channels = {0: 1, 2: 3, 4: 2, 6: 4}.get(color)
    if channels is None:
        raise ValueError(f"{path}: unsupported PNG color type {color}")
    raw = zlib.decompress(bytes(idat))
    expected = height * (1 + width * channels)
    if len(raw) != expected:
        raise ValueError(f"{path}: PNG raster size mismatch")
    flat = _defilter(raw, height, width, channels).astype(float)
    pix = flat.reshape((height, width, channels))
    if color in (0, 4):
        gray = pix[:, :, 0]
    else:
        gray = 0.299 * pix[:, :, 0] + 0.587 * pix[:, :, 1] + 0.114 * pix[:, :, 2]
    return Image.from_array(gray)


def read_image(path) -> Image:
    """Read a PGM or PNG file, detecting the format from its magic bytes."""
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(f"no such image file: {p}")
    head = p.open("rb").read(8)
    if head[:2] == b"P5":
        return read_pgm(p)
    if head == _PNG_SIGNATURE:
        return read_png(p)
    raise ValueError(f"{p}: unrecognized image format (want binary PGM or PNG)")
