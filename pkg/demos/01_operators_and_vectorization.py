"""Column-stacked vectorization and the forward-difference operators.

Walks through the pixel-ordering convention on a tiny image, applies the
horizontal and vertical differences matrix-free, and checks them against
their dense Kronecker-product equivalents.
"""
import numpy as np

from tvdenoise import Axis, DiffOperator, Image, unvectorize, vectorize

arr = np.array([[1.0, 2.0, 7.0], [3.0, 4.0, 8.0]])
img = Image.from_array(arr)
print("image (2x3):")
print(arr)
print("\nvectorized (columns stacked top to bottom):")
print(vectorize(img))
print("\nround trip restores the grid:")
print(unvectorize(vectorize(img), 2, 3).to_array())

dx = DiffOperator(2, 3, Axis.X)
dy = DiffOperator(2, 3, Axis.Y)
u = vectorize(img)
print("\nhorizontal differences (zero last column):")
print(dx.apply(u).reshape((2, 3), order="F"))
print("vertical differences (zero last row):")
print(dy.apply(u).reshape((2, 3), order="F"))


def dense_g(n):
    g = np.zeros((n, n))
    for i in range(n - 1):
        g[i, i], g[i, i + 1] = -1.0, 1.0
    return g


dense_dx = np.kron(dense_g(3), np.eye(2))
print("\nmatrix-free vs dense Kronecker product, max difference:",
      np.max(np.abs(dx.apply(u) - dense_dx @ u)))

rng = np.random.default_rng(0)
v, w = rng.standard_normal(6), rng.standard_normal(6)
print("adjoint identity <Dx v, w> - <v, Dx^T w>:",
      dx.apply(v) @ w - v @ dx.apply_transpose(w))
