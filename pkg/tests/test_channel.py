import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from choifaces.channel import (
    apply_kraus,
    block_traces,
    check_membership,
    choi_from_kraus,
    conjugate_blocks,
    is_trace_preserving,
    kraus_from_choi,
    rank1_membership,
)
from choifaces.constructions import a3, random_member
from choifaces.errors import DimensionMismatch, NotMember, NotUnitary
from choifaces.faces import face_dimension
from choifaces.linalg import kernel_basis, numerical_rank

from conftest import min_eig, random_unitary


def E(n, i, j):
    m = np.zeros((n, n))
    m[i, j] = 1.0
    return m


def blockwise_choi(kraus, n):
    """Oracle: evaluate the channel on every E_ij and tile the results."""
    return np.block([[apply_kraus(kraus, E(n, i, j)) for j in range(n)] for i in range(n)])


def random_kraus(rng, n, k, trace_preserving=True):
    g = rng.standard_normal((k * n, n)) + 1j * rng.standard_normal((k * n, n))
    if trace_preserving:
        g, _ = np.linalg.qr(g)
    return [g[t * n:(t + 1) * n] for t in range(k)]


def test_identity_channel_choi():
    z = choi_from_kraus([np.eye(2)])
    expected = np.zeros((4, 4))
    expected[np.ix_([0, 3], [0, 3])] = 1
    assert np.array_equal(z, expected)
    assert numerical_rank(z) == 1


def test_two_operator_example():
    z = choi_from_kraus([E(2, 0, 0), E(2, 0, 1)])
    assert np.allclose(z, blockwise_choi([E(2, 0, 0), E(2, 0, 1)], 2))
    assert np.allclose(z[:2, :2], E(2, 0, 0))
    assert np.allclose(z[2:, 2:], E(2, 0, 0))
    assert np.allclose(z[:2, 2:], 0)
    assert numerical_rank(z) == 2


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("tp", [True, False])
def test_choi_from_kraus_matches_blockwise_oracle(seed, tp):
    rng = np.random.default_rng(seed)
    n = 2 + seed % 3
    ops = random_kraus(rng, n, 1 + seed % 4, trace_preserving=tp)
    z = choi_from_kraus(ops)
    assert np.max(np.abs(z - blockwise_choi(ops, n))) < 1e-12
    assert min_eig(z) > -1e-12
    assert is_trace_preserving(ops) == tp
    if tp:
        assert np.allclose(block_traces(z), np.eye(n), atol=1e-12)
        assert check_membership(z).is_member


def test_kraus_set_shapes():
    with pytest.raises(DimensionMismatch):
        choi_from_kraus([np.eye(2), np.eye(3)])
    with pytest.raises(DimensionMismatch):
        choi_from_kraus([])


def test_kraus_from_identity_channel():
    (a,) = kraus_from_choi(choi_from_kraus([np.eye(3)]))
    phase = a[0, 0]
    assert abs(abs(phase) - 1) < 1e-12
    assert np.allclose(a / phase, np.eye(3))


def test_kraus_from_a3_round_trip():
    ops = kraus_from_choi(a3())
    assert len(ops) == 2
    assert np.max(np.abs(choi_from_kraus(ops) - a3())) < 1e-8


@pytest.mark.parametrize("n", [2, 3])
def test_kraus_from_depolarizing(n):
    c = np.eye(n * n) / n
    ops = kraus_from_choi(c)
    assert len(ops) == n * n
    assert np.max(np.abs(choi_from_kraus(ops) - c)) < 1e-8
    assert is_trace_preserving(ops)


@pytest.mark.parametrize("seed", range(12))
def test_round_trip_random(seed):
    rng = np.random.default_rng(seed)
    n = 2 + seed % 3
    r = int(rng.integers(1, n * n + 1))
    c = random_member(n, r, seed)
    ops = kraus_from_choi(c)
    assert len(ops) == r
    assert np.max(np.abs(choi_from_kraus(ops) - c)) <= 1e-8


def test_kraus_from_non_member():
    with pytest.raises(NotMember):
        kraus_from_choi(np.eye(4))


def test_membership_examples():
    assert check_membership(a3()).is_member
    for n in (2, 3, 4):
        assert check_membership(np.eye(n * n) / n).is_member
    x = np.array([1.0, 0, 1.0, 0])
    report = check_membership(np.outer(x, x))
    assert not report.is_member
    assert report.max_trace_condition_residual == pytest.approx(1.0)


def test_membership_reports_each_residual():
    c = np.eye(4) / 2
    bad = c.copy()
    bad[0, 1] = 0.1
    r = check_membership(bad)
    assert r.hermitian_residual == pytest.approx(0.1) and not r.is_member
    r = check_membership(np.diag([1.0, 0.0, 1.5, -0.5]).astype(complex))
    assert r.min_eigenvalue == pytest.approx(-0.5) and not r.is_member
    r = check_membership(np.eye(4))
    assert r.max_trace_condition_residual == pytest.approx(1.0) and not r.is_member


def test_membership_never_raises_on_nan():
    c = np.eye(4) / 2
    c[0, 0] = np.nan
    assert not check_membership(c).is_member


def test_rank1_examples():
    for n in (2, 3, 4):
        assert rank1_membership(np.eye(n).reshape(-1))
    assert not rank1_membership(np.array([1.0, 0, 1.0, 0]))


@pytest.mark.parametrize("seed", range(10))
def test_rank1_unitary_rows(seed):
    rng = np.random.default_rng(seed)
    n = 2 + seed % 3
    u = random_unitary(n, rng)
    x = u.conj().reshape(-1)
    assert rank1_membership(x)
    assert check_membership(np.outer(x, x.conj())).is_member


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2 ** 32 - 1), n=st.integers(2, 4), perturb=st.sampled_from([0.0, 1e-12, 1e-3, 1.0]))
def test_rank1_agrees_with_full_membership(seed, n, perturb):
    rng = np.random.default_rng(seed)
    x = random_unitary(n, rng).reshape(-1)
    x = x + perturb * (rng.standard_normal(x.size) + 1j * rng.standard_normal(x.size))
    assert rank1_membership(x) == check_membership(np.outer(x, x.conj())).is_member


def test_conjugate_identity_is_noop():
    assert np.allclose(conjugate_blocks(a3(), np.eye(3)), a3())


def test_conjugate_a3_random_unitary(rng):
    u = random_unitary(3, rng)
    a1 = conjugate_blocks(a3(), u)
    assert check_membership(a1).is_member
    assert numerical_rank(a1) == 2
    for i in range(3):
        for j in range(3):
            assert np.allclose(a1[3 * i:3 * i + 3, 3 * j:3 * j + 3],
                               u @ a3()[3 * i:3 * i + 3, 3 * j:3 * j + 3] @ u.conj().T)


def test_conjugate_maps_kernel(rng):
    q = np.zeros(9)
    q[[0, 4, 8]] = [1, -2 / np.sqrt(6), -1 / np.sqrt(6)]
    for _ in range(5):
        u = random_unitary(3, rng)
        a1 = conjugate_blocks(a3(), u)
        mapped = np.concatenate([u @ q[3 * i:3 * i + 3] for i in range(3)])
        assert np.linalg.norm(a1 @ mapped) < 1e-8
        for z in kernel_basis(a3()).T:
            mz = np.concatenate([u @ z[3 * i:3 * i + 3] for i in range(3)])
            assert np.linalg.norm(a1 @ mz) < 1e-8


@pytest.mark.parametrize("seed", range(10))
def test_face_dimension_invariant_under_conjugation(seed):
    rng = np.random.default_rng(seed)
    n = 2 + seed % 2
    c = random_member(n, int(rng.integers(1, n * n + 1)), seed)
    u = random_unitary(n, rng)
    assert face_dimension(conjugate_blocks(c, u)) == face_dimension(c)


def test_conjugate_rejects_non_unitary():
    with pytest.raises(NotUnitary):
        conjugate_blocks(a3(), 2 * np.eye(3))
    with pytest.raises(DimensionMismatch):
        conjugate_blocks(a3(), np.eye(2))
    with pytest.raises(NotMember):
        conjugate_blocks(np.eye(9), np.eye(3))
