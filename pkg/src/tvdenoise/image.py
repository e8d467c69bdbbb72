"""Grayscale image container and matrix-free forward-difference operators.

Images are stored as column-stacked intensity vectors: entry ``i + j*m``
holds the pixel at row ``i``, column ``j``.  Every module in the package
relies on this convention; mixing it with row-major stacking would silently
swap the roles of the horizontal and vertical difference operators.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = ["Axis", "Image", "DiffOperator", "vectorize", "unvectorize"]


class Axis(Enum):
    """Direction of a forward difference on the pixel grid."""

    X = "x"  # across columns (horizontal neighbour)
    Y = "y"  # down rows (vertical neighbour)


def _as_vector(v, length: int) -> np.ndarray:
    out = np.asarray(v, dtype=float)
    if out.ndim != 1 or out.shape[0] != length:
        raise ValueError(
            f"expected a vector of length {length}, got shape {out.shape}"
        )
    return out


@dataclass(frozen=True, eq=False)
class Image:
    """A 2-D grayscale intensity grid.

    Parameters
    ----------
    m, n : int
        Height and width in pixels.
    pixels : ndarray
        Intensities of length ``m*n`` in column-stacked order, double
        precision, nominal range [0, 255].  Stored read-only.
    """

    m: int
    n: int
    pixels: np.ndarray

    def __post_init__(self):
        if not (isinstance(self.m, (int, np.integer)) and self.m >= 1):
            raise ValueError(f"height must be a positive integer, got {self.m!r}")
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 1):
            raise ValueError(f"width must be a positive integer, got {self.n!r}")
        px = np.array(self.pixels, dtype=float)
        if px.ndim != 1 or px.shape[0] != self.m * self.n:
            raise ValueError(
                f"pixel vector must have length m*n = {self.m * self.n}, "
                f"got shape {px.shape}"
            )
        if not np.isfinite(px).all():
            raise ValueError("pixel intensities must be finite")
        px.flags.writeable = False
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "pixels", px)

    @classmethod
    def from_array(cls, arr) -> "Image":
        """Build an image from a 2-D array (rows x columns)."""
        a = np.asarray(arr, dtype=float)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {a.shape}")
        m, n = a.shape
        return cls(m, n, a.ravel(order="F"))

    def to_array(self) -> np.ndarray:
        """Return the pixels as a writable 2-D array (rows x columns)."""
        return self.pixels.reshape((self.m, self.n), order="F").copy()


def vectorize(image: Image) -> np.ndarray:
    """Column-stack an image into a writable vector of length m*n."""
    return image.pixels.copy()


def unvectorize(v, m: int, n: int) -> Image:
    """Inverse of :func:`vectorize`; raises on a length mismatch."""
    return Image(m, n, _as_vector(v, int(m) * int(n)))


@dataclass(frozen=True)
class DiffOperator:
    """Matrix-free forward-difference operator on an m-by-n grid.

    Acting on a column-stacked vector, axis X takes differences between
    horizontally adjacent pixels (zero on the last column) and axis Y
    between vertically adjacent pixels (zero on the last row).  The dense
    equivalents are the Kronecker products of a forward-difference matrix
    with an identity; they are never materialized here.
    """

    m: int
    n: int
    axis: Axis

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("grid dimensions must be positive")
        if not isinstance(self.axis, Axis):
            raise ValueError(f"axis must be an Axis member, got {self.axis!r}")

    def _grid(self, v) -> np.ndarray:
        return _as_vector(v, self.m * self.n).reshape((self.m, self.n), order="F")

    def apply(self, u) -> np.ndarray:
        """Forward differences of the column-stacked vector ``u``."""
        U = self._grid(u)
        out = np.zeros_like(U)
        if self.axis is Axis.X:
            if self.n > 1:
                out[:, :-1] = U[:, 1:] - U[:, :-1]
        else:
            if self.m > 1:
                out[:-1, :] = U[1:, :] - U[:-1, :]
        return out.ravel(order="F")

    def apply_transpose(self, v) -> np.ndarray:
        """Adjoint of :meth:`apply` (negative divergence along one axis)."""
        V = self._grid(v)
        out = np.zeros_like(V)
        if self.axis is Axis.X:
            if self.n > 1:
                out[:, 0] = -V[:, 0]
                out[:, -1] = V[:, -2]
                if self.n > 2:
                    out[:, 1:-1] = V[:, :-2] - V[:, 1:-1]
        else:
            if self.m > 1:
                out[0, :] = -V[0, :]
                out[-1, :] = V[-2, :]
                if self.m > 2:
                    out[1:-1, :] = V[:-2, :] - V[1:-1, :]
        return out.ravel(order="F")
