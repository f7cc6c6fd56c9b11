"""
A face that is a segment
========================

The 9 x 9 matrix A_3 has rank 2 and generates a one-dimensional face of C_3,
whose endpoints are two rank-one channels X and X1 with A_3 = (X + X1) / 2.
"""
import numpy as np

from choifaces import a3, a3_extremes, analyze, boundary_step, face_direction_basis

a = a3()
print(analyze(a))

(direction,) = face_direction_basis(a)
x, x1 = a3_extremes()
for sign in (+1, -1):
    t, end = boundary_step(a, sign * direction)
    hit = "X" if np.allclose(end, x) else "X1" if np.allclose(end, x1) else "?"
    print(f"direction {sign:+d}: boundary reached at t = {t:.6f}, endpoint {hit}")

idx = [0, 4, 8]
print("X restricted to positions 1, 5, 9:\n", np.round(x[np.ix_(idx, idx)], 6))
