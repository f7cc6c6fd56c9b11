"""
Largest proper faces
====================

Members of C_n of rank n^2 - 1 generate the largest proper faces, of
dimension n^4 - 3 n^2 + 1. Starting from a rank-one channel, repeatedly
enlarging the face adds one to the rank each time until n^2 - 1 is reached.
"""
from choifaces import extend_face, face_dimension, numerical_rank, random_member
from choifaces.constructions import standard_rank1

for n in (2, 3):
    dims = {face_dimension(random_member(n, n * n - 1, seed)) for seed in range(20)}
    print(f"n = {n}: face dimensions of rank {n * n - 1} samples {sorted(dims)}, "
          f"formula gives {n ** 4 - 3 * n ** 2 + 1}")

c = standard_rank1(3)
while numerical_rank(c) < 8:
    print(f"rank {numerical_rank(c)}: face dimension {face_dimension(c)}")
    c = extend_face(c)
print(f"rank {numerical_rank(c)}: face dimension {face_dimension(c)}")
