"""
Kraus and Choi representations of quantum channels on n x n matrices.

Conventions
-----------
The Choi matrix of ``L`` is the n^2 x n^2 block matrix whose (i, j) block is
``L(E_ij)``. Row index ``i*n + a`` addresses entry ``a`` of block row ``i``.

For a Kraus operator ``A`` the Choi contribution is ``vec(A) vec(A)^*`` where
``vec`` stacks the columns of ``A``: chunk ``i`` of the vector is column ``i``
of ``A``. :func:`kraus_from_choi` inverts exactly this reshaping.
"""
from dataclasses import dataclass

import numpy as np

from choifaces.errors import DimensionMismatch, NotMember, NotUnitary
from choifaces.linalg import (
    DEFAULT_TOL,
    as_complex_matrix,
    hermitian_eigen,
    hermitian_residual,
)


def choi_dim(c) -> int:
    """Return ``n`` for an n^2 x n^2 matrix, raising if the size is not a perfect square."""
    c = np.asarray(c)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise DimensionMismatch(f"Choi matrix must be square, got shape {c.shape}")
    n = int(round(np.sqrt(c.shape[0])))
    if n < 1 or n * n != c.shape[0]:
        raise DimensionMismatch(f"Choi matrix size {c.shape[0]} is not a perfect square")
    return n


def block_traces(c, n=None) -> np.ndarray:
    """The n x n matrix ``R`` with ``R[i, j] = tr(block_ij(c))``."""
    c = np.asarray(c)
    if n is None:
        n = choi_dim(c)
    return np.einsum("iaja->ij", c.reshape(n, n, n, n))


def vec(a) -> np.ndarray:
    """Column-stacking vectorization: chunk ``i`` is column ``i`` of ``a``."""
    return np.asarray(a).T.reshape(-1)


def unvec(v, n) -> np.ndarray:
    """Inverse of :func:`vec` for an n x n matrix."""
    return np.asarray(v).reshape(n, n).T


def _as_kraus_list(kraus):
    if isinstance(kraus, np.ndarray) and kraus.ndim == 2:
        kraus = [kraus]
    ops = [as_complex_matrix(a, square=True) for a in kraus]
    if not ops:
        raise DimensionMismatch("a Kraus set needs at least one operator")
    n = ops[0].shape[0]
    if any(a.shape != (n, n) for a in ops):
        raise DimensionMismatch("Kraus operators must all have the same square shape")
    return ops


def is_trace_preserving(kraus, tol=DEFAULT_TOL) -> bool:
    """Check ``sum_i A_i^* A_i = I`` entrywise within ``tol.equality_abs``."""
    ops = _as_kraus_list(kraus)
    total = sum(a.conj().T @ a for a in ops)
    return bool(np.max(np.abs(total - np.eye(ops[0].shape[0]))) <= tol.equality_abs)


def apply_kraus(kraus, x) -> np.ndarray:
    """Evaluate ``L(X) = sum_i A_i X A_i^*``."""
    return sum(a @ x @ a.conj().T for a in _as_kraus_list(kraus))


def choi_from_kraus(kraus) -> np.ndarray:
    """Choi matrix ``[L(E_ij)]`` of the completely positive map with the given Kraus operators.

    The result is PSD for any Kraus set; it is a member of C_n when the set is
    trace preserving.
    """
    ops = _as_kraus_list(kraus)
    cols = np.stack([vec(a) for a in ops], axis=1)
    z = cols @ cols.conj().T
    return (z + z.conj().T) / 2


def kraus_from_choi(c, tol=DEFAULT_TOL):
    """Minimal Kraus set of the channel with Choi matrix ``c``.

    Eigenvectors belonging to eigenvalues above the rank cutoff are scaled by
    the square root of their eigenvalue and reshaped with :func:`unvec`, so the
    number of operators equals the Choi rank and
    ``choi_from_kraus(kraus_from_choi(c))`` reproduces ``c``.
    """
    c = require_member(c, tol)
    n = choi_dim(c)
    vals, vecs = hermitian_eigen(c, tol)
    cutoff = tol.rank_rel * max(vals[0], 1.0)
    keep = vals > cutoff
    return [unvec(np.sqrt(lam) * v, n) for lam, v in zip(vals[keep], vecs[:, keep].T)]


@dataclass(frozen=True)
class MembershipReport:
    hermitian_residual: float
    min_eigenvalue: float
    max_trace_condition_residual: float
    is_member: bool


def check_membership(c, tol=DEFAULT_TOL) -> MembershipReport:
    """Graded test of ``c`` against the defining conditions of C_n.

    Never raises for a well-shaped matrix; a wrong shape raises
    :class:`DimensionMismatch`.
    """
    c = np.asarray(c, dtype=complex)
    n = choi_dim(c)
    herm = hermitian_residual(c)
    if not np.all(np.isfinite(c)):
        return MembershipReport(np.inf, -np.inf, np.inf, False)
    min_eig = float(np.linalg.eigvalsh((c + c.conj().T) / 2)[0])
    trace_resid = float(np.max(np.abs(block_traces(c, n) - np.eye(n))))
    ok = herm <= tol.equality_abs and min_eig >= -tol.psd_abs and trace_resid <= tol.equality_abs
    return MembershipReport(herm, min_eig, trace_resid, bool(ok))


def require_member(c, tol=DEFAULT_TOL) -> np.ndarray:
    """Return ``c`` as a symmetrized complex array, raising :class:`NotMember` if it is not in C_n."""
    c = as_complex_matrix(c, square=True)
    report = check_membership(c, tol)
    if not report.is_member:
        raise NotMember(
            "matrix is not in C_n: hermitian residual {:.3e}, min eigenvalue {:.3e}, "
            "trace residual {:.3e}".format(
                report.hermitian_residual, report.min_eigenvalue,
                report.max_trace_condition_residual))
    return (c + c.conj().T) / 2


def rank1_membership(x, tol=DEFAULT_TOL) -> bool:
    """Decide whether ``x x^*`` lies in C_n by checking that the n chunks of ``x`` are orthonormal."""
    x = np.asarray(x, dtype=complex).reshape(-1)
    n = int(round(np.sqrt(x.size)))
    if n * n != x.size:
        raise DimensionMismatch(f"vector length {x.size} is not a perfect square")
    chunks = x.reshape(n, n)
    gram = chunks @ chunks.conj().T
    return bool(np.max(np.abs(gram - np.eye(n))) <= tol.equality_abs)


def block_unitary(u, n) -> np.ndarray:
    """``I_n (x) U``: acts with ``U`` on every length-n chunk."""
    return np.kron(np.eye(n), u)


def conjugate_blocks(c, u, tol=DEFAULT_TOL) -> np.ndarray:
    """Replace every block ``A_ij`` of ``c`` by ``U A_ij U^*``.

    Kernel vectors ``[z_1; ...; z_n]`` of ``c`` map to ``[U z_1; ...; U z_n]``.
    """
    c = require_member(c, tol)
    n = choi_dim(c)
    u = as_complex_matrix(u, square=True)
    if u.shape != (n, n):
        raise DimensionMismatch(f"unitary must be {n}x{n}, got {u.shape}")
    if np.max(np.abs(u.conj().T @ u - np.eye(n))) > tol.equality_abs:
        raise NotUnitary("matrix is not unitary")
    w = block_unitary(u, n)
    out = w @ c @ w.conj().T
    return (out + out.conj().T) / 2
