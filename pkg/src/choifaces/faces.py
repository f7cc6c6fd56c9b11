"""
Faces of the set C_n of Choi matrices of quantum channels.

The face generated by ``A`` consists of the members whose range lies in
``range(A)``. Compressing by an isometry ``V`` onto that range turns the face
into the set of PSD r x r matrices ``M`` for which ``V M V^*`` satisfies the
block-trace conditions, and ``V^* A V`` is positive definite there. So the face
dimension is the dimension of the solution space of the homogeneous block-trace
conditions on r x r Hermitian matrices: ``r^2 - rank(T)`` for the real linear
map ``T`` built by :func:`trace_constraint_map`.
"""
from dataclasses import dataclass

import numpy as np

from choifaces.channel import (
    block_traces,
    choi_dim,
    kraus_from_choi,
    require_member,
)
from choifaces.errors import (
    DegenerateDirection,
    InvalidDirection,
    RankTooHigh,
)
from choifaces.linalg import (
    DEFAULT_TOL,
    as_complex_matrix,
    hermitian_residual,
    kernel_basis,
    numerical_rank,
    psd_sqrt_inv,
    range_isometry,
    real_numerical_rank,
)


def hermitian_basis(r) -> np.ndarray:
    """Frobenius-orthonormal basis of r x r Hermitian matrices, shape ``(r*r, r, r)``.

    Order: the r diagonal units, then for each above-diagonal position ``(p, q)``
    in row-major order a real-symmetric and an imaginary-antisymmetric element.
    """
    basis = np.zeros((r * r, r, r), dtype=complex)
    for p in range(r):
        basis[p, p, p] = 1.0
    k = r
    h = 1 / np.sqrt(2)
    for p in range(r):
        for q in range(p + 1, r):
            basis[k, p, q] = basis[k, q, p] = h
            basis[k + 1, p, q] = 1j * h
            basis[k + 1, q, p] = -1j * h
            k += 2
    return basis


def hermitian_coords(m) -> np.ndarray:
    """Real coordinates of Hermitian ``m`` in :func:`hermitian_basis`."""
    m = np.asarray(m)
    return np.real(np.einsum("kpq,pq->k", hermitian_basis(m.shape[0]).conj(), m))


def hermitian_from_coords(x, r) -> np.ndarray:
    return np.einsum("k,kpq->pq", np.asarray(x, dtype=float), hermitian_basis(r))


def hermitian_residual_vector(h) -> np.ndarray:
    """Real vector of a Hermitian n x n matrix: diagonal, then (Re, Im) above the diagonal."""
    h = np.asarray(h)
    n = h.shape[0]
    iu = np.triu_indices(n, 1)
    upper = h[iu]
    out = np.empty(n * n)
    out[:n] = np.real(np.diag(h))
    out[n::2] = upper.real
    out[n + 1::2] = upper.imag
    return out


@dataclass(frozen=True)
class TraceConstraintMap:
    """Block-trace conditions restricted to the range of a member.

    ``matrix`` has shape ``(n*n, r*r)``: column k is the residual vector of the
    block traces of ``V H_k V^*`` for the k-th Hermitian basis element ``H_k``.
    """
    n: int
    r: int
    matrix: np.ndarray
    isometry: np.ndarray

    def evaluate(self, m) -> np.ndarray:
        return self.matrix @ hermitian_coords(m)


def trace_constraint_map(c, tol=DEFAULT_TOL) -> TraceConstraintMap:
    c = require_member(c, tol)
    n = choi_dim(c)
    v = range_isometry(c, tol)
    r = v.shape[1]
    vb = v.reshape(n, n, r)
    # K[i, j, p, q] = tr(block_ij(V E_pq V^*))
    k = np.einsum("iap,jaq->ijpq", vb, vb.conj())
    traces = np.einsum("bpq,ijpq->bij", hermitian_basis(r), k)
    matrix = np.stack([hermitian_residual_vector(t) for t in traces], axis=1)
    return TraceConstraintMap(n=n, r=r, matrix=matrix, isometry=v)


@dataclass(frozen=True)
class FaceSpectrum:
    """Face dimension together with the singular values that decided it.

    ``spectral_gap`` is the ratio of the smallest kept singular value to the
    largest dropped one; when nothing is dropped the rank cutoff stands in for
    the denominator.
    """
    face_dim: int
    rank: int
    singular_values: np.ndarray
    cutoff: float
    spectral_gap: float


def face_spectrum(c, tol=DEFAULT_TOL) -> FaceSpectrum:
    tmap = trace_constraint_map(c, tol)
    rank, s, cutoff = real_numerical_rank(tmap.matrix, tol)
    kept = s[:rank]
    dropped = s[rank:]
    if rank == 0:
        gap = np.inf
    else:
        denom = dropped.max() if dropped.size else cutoff
        gap = float(kept.min() / denom) if denom > 0 else np.inf
    return FaceSpectrum(
        face_dim=tmap.r ** 2 - rank,
        rank=tmap.r,
        singular_values=s,
        cutoff=cutoff,
        spectral_gap=gap,
    )


def face_dimension(c, tol=DEFAULT_TOL) -> int:
    """Dimension of the face of C_n generated by ``c``."""
    return face_spectrum(c, tol).face_dim


def is_extreme(c, tol=DEFAULT_TOL) -> bool:
    return face_dimension(c, tol) == 0


def choi_criterion_extreme(c, tol=DEFAULT_TOL) -> bool:
    """Extremality via linear independence of ``{A_i^* A_j}`` over a minimal Kraus set.

    Independent of the face computation: works on the Kraus operators only.
    """
    ops = kraus_from_choi(c, tol)
    r = len(ops)
    products = np.stack([(a.conj().T @ b).reshape(-1) for a in ops for b in ops], axis=1)
    rank, _, _ = real_numerical_rank(products, tol)
    return rank == r * r


def face_direction_basis(c, tol=DEFAULT_TOL):
    """Orthonormal basis of directions along which ``c`` can move inside its face.

    Each direction is Hermitian, has zero block traces and range inside
    ``range(c)``; there are exactly :func:`face_dimension` of them. Coordinate
    signs are fixed so the largest entry of each kernel vector is positive.
    """
    tmap = trace_constraint_map(c, tol)
    r = tmap.r
    rank, _, _ = real_numerical_rank(tmap.matrix, tol)
    _, _, vt = np.linalg.svd(tmap.matrix, full_matrices=True)
    v = tmap.isometry
    directions = []
    for coords in vt[rank:]:
        if coords[np.argmax(np.abs(coords))] < 0:
            coords = -coords
        d = v @ hermitian_from_coords(coords, r) @ v.conj().T
        directions.append((d + d.conj().T) / 2)
    return directions


def _check_direction(c, delta, v, tol):
    n = choi_dim(c)
    scale = float(np.max(np.abs(delta))) if delta.size else 0.0
    if delta.shape != c.shape:
        raise InvalidDirection(f"direction shape {delta.shape} does not match {c.shape}")
    if scale == 0.0:
        raise InvalidDirection("direction is zero")
    limit = tol.equality_abs * scale
    if hermitian_residual(delta) > limit:
        raise InvalidDirection("direction is not Hermitian")
    if np.max(np.abs(block_traces(delta, n))) > limit:
        raise InvalidDirection("direction has nonzero block traces")
    proj = v @ v.conj().T
    if np.max(np.abs(delta - proj @ delta @ proj)) > limit:
        raise InvalidDirection("direction leaves the range of the generating matrix")


def boundary_step(c, delta, tol=DEFAULT_TOL):
    """Move from ``c`` along ``delta`` until the relative boundary of its face.

    :return: ``(t_max, b)`` with ``b = c + t_max * delta`` a member of lower rank.
    """
    c = require_member(c, tol)
    delta = as_complex_matrix(delta, square=True)
    v = range_isometry(c, tol)
    _check_direction(c, delta, v, tol)
    m0 = v.conj().T @ c @ v
    nmat = v.conj().T @ delta @ v
    s = psd_sqrt_inv(m0)
    w = s @ nmat @ s
    lam_min = float(np.linalg.eigvalsh((w + w.conj().T) / 2)[0])
    if lam_min >= -tol.psd_abs:
        raise DegenerateDirection(
            f"direction is positive semidefinite on the face (min eigenvalue {lam_min:.3e})")
    t_max = -1.0 / lam_min
    b = c + t_max * delta
    return t_max, (b + b.conj().T) / 2


def extend_face(c, rng_seed=None, tol=DEFAULT_TOL) -> np.ndarray:
    """Member of rank ``rank(c) + 1`` whose face strictly contains the face of ``c``.

    Builds ``(c + u u^*) / 2`` with ``u`` a rank-one member (orthonormal chunks
    ``e_sigma(k)``, one of them rotated by a phase) that is not orthogonal to a
    kernel vector of ``c``. Deterministic when ``rng_seed`` is None; otherwise
    the kernel vector is a random combination of the kernel basis.
    """
    c = require_member(c, tol)
    n = choi_dim(c)
    rank = numerical_rank(c, tol)
    if rank > n * n - 2:
        raise RankTooHigh(f"rank {rank} exceeds n^2 - 2 = {n * n - 2}")
    ker = kernel_basis(c, tol)
    if rng_seed is None:
        x = ker[:, 0]
    else:
        rng = np.random.default_rng(rng_seed)
        coef = rng.standard_normal(ker.shape[1]) + 1j * rng.standard_normal(ker.shape[1])
        x = ker @ coef
        x = x / np.linalg.norm(x)
    chunks = x.reshape(n, n)
    # first entry that is clearly above the eigen-solver noise
    big = np.argwhere(np.abs(chunks) > 1e-3 * np.max(np.abs(chunks)))
    i, j = (int(big[0][0]), int(big[0][1]))
    sigma = [(k + j - i) % n for k in range(n)]

    def build(theta):
        u = np.zeros(n * n, dtype=complex)
        for k in range(n):
            u[k * n + sigma[k]] = 1.0
        u[i * n + j] = np.exp(1j * theta)
        return u

    candidates = [build(0.0), build(np.pi / 2)]
    u = max(candidates, key=lambda cand: abs(np.vdot(cand, x)))
    a1 = (c + np.outer(u, u.conj())) / 2
    return (a1 + a1.conj().T) / 2


@dataclass(frozen=True)
class FaceReport:
    n: int
    rank: int
    face_dim: int
    is_extreme: bool
    choi_criterion_extreme: bool
    kernel_dim: int
    spectral_gap: float


def analyze(c, tol=DEFAULT_TOL) -> FaceReport:
    """Rank, face dimension and both extremality verdicts for a member of C_n."""
    c = require_member(c, tol)
    n = choi_dim(c)
    spec = face_spectrum(c, tol)
    extreme = spec.face_dim == 0
    if extreme and spec.rank > n:
        raise RuntimeError(
            f"extreme point with rank {spec.rank} > n = {n}; rank threshold is inconsistent")
    return FaceReport(
        n=n,
        rank=spec.rank,
        face_dim=spec.face_dim,
        is_extreme=extreme,
        choi_criterion_extreme=choi_criterion_extreme(c, tol),
        kernel_dim=n * n - spec.rank,
        spectral_gap=spec.spectral_gap,
    )
