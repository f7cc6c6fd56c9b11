"""
Explicit members of C_n with known face structure, plus seeded random members.

Surd constants are evaluated from their closed forms at call time.
"""
from dataclasses import dataclass

import numpy as np

from choifaces.channel import block_traces, choi_dim
from choifaces.errors import BadDimension, DegenerateSample, Infeasible, UnknownExample
from choifaces.linalg import DEFAULT_TOL, numerical_rank, psd_sqrt_inv

SQ6 = np.sqrt(6.0)
C12 = 9 / (4 * SQ6)   # cos(theta)
C13 = 3 / (2 * SQ6)   # cos(phi)
C23 = 0.25
S12 = np.sqrt(5.0) / (4 * np.sqrt(2.0))   # sin(theta) for the first extreme point
S13 = -np.sqrt(5.0) / (2 * np.sqrt(2.0))  # sin(phi)


def _unit(n, k):
    e = np.zeros(n)
    e[k] = 1.0
    return e


def p_matrix() -> np.ndarray:
    """The 3 x 3 rank-2 PSD matrix annihilating ``[1, -2/sqrt(6), -1/sqrt(6)]``."""
    return np.array([
        [1.0, C12, C13],
        [C12, 1.0, C23],
        [C13, C23, 1.0],
    ])


def diagonal_pattern_choi(q) -> np.ndarray:
    """Choi matrix whose (i, j) block is ``q[i, j] * E_ij``.

    Members of C_n exactly when ``q`` is PSD with unit diagonal.
    """
    q = np.asarray(q, dtype=complex)
    n = q.shape[0]
    out = np.zeros((n * n, n * n), dtype=complex)
    idx = np.arange(n) * (n + 1)
    out[np.ix_(idx, idx)] = q
    return out


def a3() -> np.ndarray:
    """Rank-2 member of C_3 whose face is a segment."""
    return diagonal_pattern_choi(p_matrix())


def a3_extremes():
    """The two endpoints ``(X, X1)`` of the face of :func:`a3`, both rank one.

    ``X1`` is the entrywise conjugate of ``X`` and ``(X + X1) / 2 == a3()``.
    """
    # x = (1, exp(-i theta), exp(-i phi)) on the diagonal pattern positions
    phases = np.array([1.0, C12 - 1j * S12, C13 - 1j * S13])
    x = diagonal_pattern_choi(np.outer(phases, phases.conj()))
    return x, x.conj()


def an_family(n) -> np.ndarray:
    """Rank-2 member of C_n (n >= 3) with a one-dimensional face; equals :func:`a3` at n = 3."""
    if n < 3:
        raise BadDimension(f"family is defined for n >= 3, got {n}")
    q = np.ones((n, n))
    q[: n - 2, n - 2] = q[n - 2, : n - 2] = C12
    q[: n - 2, n - 1] = q[n - 1, : n - 2] = C13
    q[n - 2, n - 1] = q[n - 1, n - 2] = C23
    return diagonal_pattern_choi(q)


def case_iia_example(n) -> np.ndarray:
    """Rank-2 extreme point ``y y^* + z z^*`` with ``y = [e1; 0; ...]``, ``z = [0; e1; ...; e_{n-1}]``."""
    if n < 3:
        raise BadDimension(f"example is defined for n >= 3, got {n}")
    y = np.concatenate([_unit(n, 0)] + [np.zeros(n)] * (n - 1))
    z = np.concatenate([np.zeros(n)] + [_unit(n, k) for k in range(n - 1)])
    return (np.outer(y, y) + np.outer(z, z)).astype(complex)


def standard_rank1(n) -> np.ndarray:
    """``v v^*`` with ``v = [e1; e2; ...; en]``: the Choi matrix of the identity channel."""
    v = np.concatenate([_unit(n, k) for k in range(n)])
    return np.outer(v, v).astype(complex)


def _embedded_indices(n):
    # positions (i, a) with i, a >= 1: a copy of the (n-1)^2 index set
    return np.array([i * n + a for i in range(1, n) for a in range(1, n)])


def embed_block(b, couple=False) -> np.ndarray:
    """Embed a member ``b`` of C_{n-1} into C_n.

    The result has ``a_11 = 1``, the rows indexed by ``2..n`` and by the first
    entries of the remaining chunks vanish, and the principal submatrix on the
    other positions is ``b``. With ``couple=False`` the first row is otherwise
    zero. With ``couple=True`` the first row copies the first row of ``b``
    scaled by ``1/sqrt(b_11)``, making column 1 proportional to the column of
    ``b_11``.
    """
    b = np.asarray(b, dtype=complex)
    m = choi_dim(b)
    n = m + 1
    s = _embedded_indices(n)
    out = np.zeros((n * n, n * n), dtype=complex)
    out[np.ix_(s, s)] = b
    out[0, 0] = 1.0
    if couple:
        b11 = b[0, 0].real
        if b11 <= 0:
            raise Infeasible("coupled embedding needs b_11 > 0")
        row = b[0, :] / np.sqrt(b11)
        out[0, s] = row
        out[s, 0] = row.conj()
    return out


def embed_rank1_example(n) -> np.ndarray:
    """Rank-2 member of C_n (n >= 3) with a two-dimensional face, from the rank-one point of C_{n-1}."""
    if n < 3:
        raise BadDimension(f"example is defined for n >= 3, got {n}")
    return embed_block(standard_rank1(n - 1))


@dataclass(frozen=True)
class Rank2FamilyN2Params:
    c: float
    s: complex = 0.0
    y: complex = 0.0


def rank2_family_n2(p, tol=DEFAULT_TOL) -> np.ndarray:
    """The 4 x 4 family of members of C_2 with ``L(E_11) = E_11``.

    Rank two when ``(1 - c)(c - |y|^2) = |s|^2`` with ``c < 1``, or when
    ``c = 1, s = 0, |y| < 1``.
    """
    c, s, y = float(p.c), complex(p.s), complex(p.y)
    if not 0.0 <= c <= 1.0:
        raise Infeasible(f"c must lie in [0, 1], got {c}")
    a = np.array([
        [1, 0, 0, y],
        [0, 0, 0, 0],
        [0, 0, 1 - c, s],
        [np.conj(y), 0, np.conj(s), c],
    ], dtype=complex)
    min_eig = np.linalg.eigvalsh(a)[0]
    if min_eig < -tol.psd_abs:
        raise Infeasible(f"parameters give an indefinite matrix (min eigenvalue {min_eig:.3e})")
    return a


def random_member(n, r, seed, tol=DEFAULT_TOL) -> np.ndarray:
    """Seeded random member of C_n with rank exactly ``r``.

    ``B = G G^*`` for an n^2 x r complex Gaussian ``G``, then the block index is
    transformed by ``R^{-1/2}`` where ``R`` holds the block traces of ``B``.
    That keeps the rank and makes the block traces the identity.
    """
    if not 1 <= r <= n * n:
        raise BadDimension(f"rank must lie in 1..{n * n}, got {r}")
    rng = np.random.default_rng(seed)
    for _ in range(10):
        g = rng.standard_normal((n * n, r)) + 1j * rng.standard_normal((n * n, r))
        b = g @ g.conj().T
        rmat = block_traces(b, n)
        rvals = np.linalg.eigvalsh((rmat + rmat.conj().T) / 2)
        if rvals[0] <= tol.rank_rel * rvals[-1]:
            continue
        w = np.kron(psd_sqrt_inv(rmat), np.eye(n))
        out = w @ b @ w.conj().T
        out = (out + out.conj().T) / 2
        if numerical_rank(out, tol) == r:
            return out
    raise DegenerateSample(f"could not draw a rank-{r} member of C_{n}")


CATALOG = {
    "p": "3x3 PSD matrix P (not a Choi matrix)",
    "a3": "rank-2 member of C_3 with a 1-dimensional face",
    "a3-extreme-x": "first endpoint of the face of a3",
    "a3-extreme-x1": "second endpoint of the face of a3",
    "an": "rank-2 member of C_n with a 1-dimensional face (n >= 3)",
    "case-iia": "rank-2 extreme point yy* + zz* (n >= 3)",
    "embed-rank1": "rank-2 member with a 2-dimensional face (n >= 3)",
    "rank2-n2": "4x4 family in C_2 with parameters c, s, y",
    "random": "seeded random member of C_n of given rank",
}


def build_example(name, n=3, rank=None, seed=0, c=1.0, s=0.0, y=0.0, tol=DEFAULT_TOL):
    """Construct the catalog entry ``name``; unused parameters are ignored."""
    if name == "p":
        return p_matrix()
    if name == "a3":
        return a3()
    if name == "a3-extreme-x":
        return a3_extremes()[0]
    if name == "a3-extreme-x1":
        return a3_extremes()[1]
    if name == "an":
        return an_family(n)
    if name == "case-iia":
        return case_iia_example(n)
    if name == "embed-rank1":
        return embed_rank1_example(n)
    if name == "rank2-n2":
        return rank2_family_n2(Rank2FamilyN2Params(c=c, s=s, y=y), tol)
    if name == "random":
        return random_member(n, n * n if rank is None else rank, seed, tol)
    raise UnknownExample(f"unknown example {name!r}; available: {', '.join(CATALOG)}")
