"""
Decomposing a channel into extreme channels
===========================================

Any member of C_n is a convex combination of at most n^2 extreme points.
The decomposition walks to an extreme point inside the face, pushes the
segment through the input to the face boundary and repeats on the lower-rank
remainder.
"""
import numpy as np

from choifaces import choi_criterion_extreme, decompose, numerical_rank, random_member

c = random_member(3, 9, seed=2024)
dec = decompose(c)
print(f"{len(dec)} extreme points, reconstruction residual {dec.residual:.2e}")
for w, p in zip(dec.weights, dec.points):
    print(f"  weight {w:.6f}  rank {numerical_rank(p)}  extreme by Kraus test: {choi_criterion_extreme(p)}")
print("weights sum to", np.sum(dec.weights))
