"""The three proximal maps behind the solver's closed-form sub-problems.

Soft shrinkage pulls values toward zero by a threshold, the cut function
keeps what shrinkage removed, and paired shrinkage does the same to the
Euclidean length of a gradient pair.
"""
import numpy as np

from tvdenoise import cut, shrink1, shrink2_paired

v = np.array([-2.0, -0.6, -0.2, 0.0, 0.2, 0.6, 2.0])
gamma = 0.5
print(f"threshold gamma = {gamma}")
print("v         :", v)
print("shrink1(v):", shrink1(v, gamma))
print("cut(v)    :", cut(v, gamma))
print("sum       :", shrink1(v, gamma) + cut(v, gamma), "(recomposes v)")
print("cut stays inside [-gamma, gamma]:", np.max(np.abs(cut(v, gamma))) <= gamma)

# shrink1 really is the minimizer of gamma*|u| + 0.5*(u - v)^2
value = 0.7
grid = np.arange(-1.0, 1.5, 1e-4)
objective = gamma * np.abs(grid) + 0.5 * (grid - value) ** 2
print(f"\nbrute-force argmin for v={value}: {grid[np.argmin(objective)]:.4f}"
      f"   closed form: {shrink1(np.array([value]), gamma)[0]:.4f}")

# paired shrinkage scales the vector (3, 4) of length 5
x, y = np.array([3.0]), np.array([4.0])
for g in (2.5, 5.0, 7.0):
    sx, sy = shrink2_paired(x, y, g)
    print(f"paired, gamma={g}: (3, 4) -> ({sx[0]}, {sy[0]})")
