"""Decomposition of channels into convex combinations of extreme channels."""
from dataclasses import dataclass, field

import numpy as np

from choifaces.channel import choi_dim, require_member
from choifaces.errors import DecompositionOverflow, IterationOverflow
from choifaces.faces import boundary_step, face_direction_basis
from choifaces.linalg import DEFAULT_TOL, numerical_rank


@dataclass
class Decomposition:
    weights: list
    points: list
    residual: float = field(default=0.0)

    def reconstruct(self) -> np.ndarray:
        return sum(w * p for w, p in zip(self.weights, self.points))

    def __len__(self):
        return len(self.points)


def find_extreme_in_face(c, tol=DEFAULT_TOL, seed=None) -> np.ndarray:
    """Walk from ``c`` to an extreme point of C_n inside the face of ``c``.

    Each step follows a face direction to the relative boundary, where the rank
    drops, so at most ``rank(c)`` steps are taken. With ``seed`` set the
    direction is drawn at random from the basis instead of taking the first.
    """
    c = require_member(c, tol)
    rng = None if seed is None else np.random.default_rng(seed)
    rank = numerical_rank(c, tol)
    for _ in range(rank + 1):
        directions = face_direction_basis(c, tol)
        if not directions:
            return c
        k = 0 if rng is None else int(rng.integers(len(directions)))
        _, b = boundary_step(c, directions[k], tol)
        new_rank = numerical_rank(b, tol)
        if new_rank >= rank:
            raise IterationOverflow(f"rank did not drop at a boundary step ({rank} -> {new_rank})")
        c, rank = b, new_rank
    raise IterationOverflow("descent did not reach an extreme point")


def decompose(c, tol=DEFAULT_TOL, seed=None) -> Decomposition:
    """Write ``c`` as a convex combination of at most n^2 extreme points of C_n.

    Take an extreme point ``E`` of the face of ``c``, extend the segment from
    ``E`` through ``c`` to the boundary point ``C`` of that face and recurse on
    ``C``, whose rank is smaller. With ``s`` the step length,
    ``c = s/(1+s) E + 1/(1+s) C``.
    """
    c = require_member(c, tol)
    n = choi_dim(c)
    original = c
    weights, points = [], []
    carry = 1.0
    while True:
        if len(points) >= n * n:
            raise DecompositionOverflow(f"more than n^2 = {n * n} points accumulated")
        e = find_extreme_in_face(c, tol, seed=seed)
        if np.max(np.abs(c - e)) <= tol.equality_abs:
            weights.append(carry)
            points.append(e)
            break
        s, c_next = boundary_step(c, c - e, tol)
        weights.append(carry * s / (1 + s))
        points.append(e)
        carry = carry / (1 + s)
        c = c_next
    dec = Decomposition(weights=weights, points=points)
    dec.residual = float(np.max(np.abs(dec.reconstruct() - original)))
    return dec
