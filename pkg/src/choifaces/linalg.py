"""
Dense Hermitian linear algebra with explicit numerical tolerances.

Every rank decision in the package goes through :func:`numerical_rank`,
which counts eigenvalues above ``rank_rel * max(lambda_max, 1)``.
"""
from dataclasses import dataclass

import numpy as np

from choifaces.errors import DimensionMismatch, NonHermitian, NotPSD


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by all operations.

    :param rank_rel: relative eigenvalue cutoff used for rank decisions.
    :param psd_abs: how negative the smallest eigenvalue may be for a PSD matrix.
    :param equality_abs: entrywise tolerance for equality checks.
    """
    rank_rel: float = 1e-9
    psd_abs: float = 1e-9
    equality_abs: float = 1e-8

    def __post_init__(self):
        for name in ("rank_rel", "psd_abs", "equality_abs"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"tolerance {name} must be strictly positive, got {value!r}")


DEFAULT_TOL = Tolerances()


def as_complex_matrix(m, square=False) -> np.ndarray:
    """Copy ``m`` into a finite 2-d complex array, optionally requiring it to be square."""
    arr = np.array(m, dtype=complex)
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got shape {arr.shape}")
    if square and arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def hermitian_residual(m) -> float:
    """Largest entry of ``|m - m^*|``."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def hermitian_eigen(m, tol=DEFAULT_TOL):
    """Eigendecomposition of a Hermitian matrix, eigenvalues in descending order.

    The input is symmetrized before decomposition; a symmetrization residual
    larger than ``tol.equality_abs`` raises :class:`NonHermitian`.

    :return: ``(eigenvalues, eigenvectors)`` with eigenvectors as columns.
    """
    m = as_complex_matrix(m, square=True)
    resid = hermitian_residual(m)
    if resid > tol.equality_abs:
        raise NonHermitian(f"matrix is not Hermitian (residual {resid:.3e})")
    vals, vecs = np.linalg.eigh((m + m.conj().T) / 2)
    return vals[::-1].copy(), vecs[:, ::-1].copy()


def _rank_cutoff(vals, tol):
    return tol.rank_rel * max(float(vals[0]) if len(vals) else 0.0, 1.0)


def _psd_eigen(m, tol):
    vals, vecs = hermitian_eigen(m, tol)
    if len(vals) and vals[-1] < -tol.psd_abs:
        raise NotPSD(f"matrix is not positive semidefinite (min eigenvalue {vals[-1]:.3e})")
    return vals, vecs


def numerical_rank(m, tol=DEFAULT_TOL) -> int:
    """Number of eigenvalues of the PSD matrix ``m`` above the relative cutoff."""
    vals, _ = _psd_eigen(m, tol)
    return int(np.count_nonzero(vals > _rank_cutoff(vals, tol)))


def kernel_basis(m, tol=DEFAULT_TOL) -> np.ndarray:
    """Orthonormal columns spanning the numerical kernel of the PSD matrix ``m``."""
    vals, vecs = _psd_eigen(m, tol)
    r = int(np.count_nonzero(vals > _rank_cutoff(vals, tol)))
    return vecs[:, r:]


def range_isometry(m, tol=DEFAULT_TOL) -> np.ndarray:
    """Isometry ``V`` (orthonormal columns) onto the numerical range of the PSD matrix ``m``."""
    vals, vecs = _psd_eigen(m, tol)
    r = int(np.count_nonzero(vals > _rank_cutoff(vals, tol)))
    return vecs[:, :r]


def real_numerical_rank(a, tol=DEFAULT_TOL):
    """Rank of a general matrix from its singular values, using the same cutoff policy.

    :return: ``(rank, singular_values, cutoff)``.
    """
    s = np.linalg.svd(np.asarray(a), compute_uv=False)
    cutoff = _rank_cutoff(s, tol)
    return int(np.count_nonzero(s > cutoff)), s, cutoff


def psd_sqrt_inv(m) -> np.ndarray:
    """Inverse square root of a positive definite Hermitian matrix."""
    vals, vecs = np.linalg.eigh((m + m.conj().T) / 2)
    return (vecs / np.sqrt(vals)) @ vecs.conj().T
