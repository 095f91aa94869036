import numpy as np
import pytest

import invariant_states as iv
from invariant_states import Operator, Rng


def random_hermitian(d, n, seed):
    gen = np.random.default_rng(seed)
    side = d**n
    m = gen.standard_normal((side, side)) + 1j * gen.standard_normal((side, side))
    return Operator(d, n, (m + m.conj().T) / 2)


def random_state(d, n, seed):
    gen = np.random.default_rng(seed)
    side = d**n
    m = gen.standard_normal((side, side)) + 1j * gen.standard_normal((side, side))
    rho = m @ m.conj().T
    return Operator(d, n, rho / np.trace(rho))


# --- construction ---------------------------------------------------------


def test_operator_validation():
    with pytest.raises(ValueError):
        Operator(1, 1, np.eye(1))
    with pytest.raises(ValueError):
        Operator(2, 0, np.eye(1))
    with pytest.raises(ValueError):
        Operator(2, 2, np.eye(3))
    with pytest.raises(ValueError):
        Operator(2, 13, np.eye(4))  # side 8192 exceeds the supported scale


def test_operator_matrix_is_frozen():
    op = iv.identity(2, 1)
    with pytest.raises(ValueError):
        op.mat[0, 0] = 5.0


# --- tensor product -------------------------------------------------------


def test_tensor_identity():
    prod = iv.tensor_product(iv.identity(2, 1), iv.identity(2, 1))
    assert prod.n == 2
    np.testing.assert_array_equal(prod.mat, np.eye(4))


def test_tensor_trace_multiplicative():
    # dense oracle: Tr(flip) by summing the diagonal
    f = iv.flip(2)
    assert np.sum(np.diagonal(f.mat)).real == 2.0
    prod = iv.tensor_product(f, iv.identity(2, 1))
    assert abs(prod.trace() - 4.0) < 1e-15

    q0q1 = iv.tensor_product(iv.werner_projector(2, 0), iv.werner_projector(2, 1))
    assert abs(q0q1.trace() - 3.0) < 1e-15

    a = random_hermitian(2, 2, 1)
    b = random_hermitian(2, 1, 2)
    lhs = iv.tensor_product(a, b).trace()
    assert abs(lhs - a.trace() * b.trace()) < 1e-12


def test_tensor_dimension_mismatch():
    with pytest.raises(ValueError):
        iv.tensor_product(iv.identity(2, 1), iv.identity(3, 1))


# --- partial trace --------------------------------------------------------


def test_partial_trace_identity_factor():
    out = iv.partial_trace(iv.identity(2, 2), {1})
    np.testing.assert_allclose(out.mat, 2 * np.eye(2))


def test_partial_trace_max_entangled():
    # reduced state of a maximally entangled pair is maximally mixed
    out = iv.partial_trace(iv.max_entangled_projector(2), {1})
    np.testing.assert_allclose(out.mat, np.eye(2) / 2, atol=1e-15)


def test_partial_trace_flip():
    out = iv.partial_trace(iv.flip(2), {2})
    np.testing.assert_allclose(out.mat, np.eye(2), atol=1e-15)


def test_partial_trace_preserves_trace():
    for seed, subs in ((0, {1}), (1, {2, 3}), (2, {1, 3})):
        op = random_hermitian(2, 3, seed)
        reduced = iv.partial_trace(op, subs)
        assert abs(reduced.trace() - op.trace()) < 1e-12


def test_partial_trace_errors():
    op = iv.identity(2, 2)
    with pytest.raises(ValueError):
        iv.partial_trace(op, {3})
    with pytest.raises(ValueError):
        iv.partial_trace(op, set())
    with pytest.raises(ValueError):
        iv.partial_trace(op, {1, 2})
    with pytest.raises(ValueError):
        iv.partial_trace(op, [1, 1])


# --- partial transpose ----------------------------------------------------


def test_partial_transpose_flip():
    for d in (2, 3, 4):
        lhs = iv.partial_transpose(iv.flip(d), {2})
        rhs = d * iv.max_entangled_projector(d)
        assert np.max(np.abs(lhs.mat - rhs.mat)) == 0.0


def test_partial_transpose_identity_invariant():
    op = iv.identity(3, 2)
    for subs in ({1}, {2}, {1, 2}):
        np.testing.assert_array_equal(iv.partial_transpose(op, subs).mat, op.mat)


def test_partial_transpose_involution_exact():
    rho = random_hermitian(2, 2, 3)
    back = iv.partial_transpose(iv.partial_transpose(rho, {2}), {2})
    np.testing.assert_array_equal(back.mat, rho.mat)


def test_partial_transpose_preserves_trace_and_hermiticity():
    rho = random_hermitian(3, 2, 4)
    pt = iv.partial_transpose(rho, {1})
    assert pt.trace() == rho.trace()
    assert pt.is_hermitian(atol=0.0)


def test_partial_transpose_empty_set_is_identity():
    rho = random_hermitian(2, 2, 5)
    np.testing.assert_array_equal(iv.partial_transpose(rho, set()).mat, rho.mat)


# --- eigenvalues ----------------------------------------------------------


def test_min_eigenvalue_projector():
    assert abs(iv.min_eigenvalue(iv.werner_projector(2, 1))) < 1e-14


def test_min_eigenvalue_transposed_entangled():
    # dense eigendecomposition oracle: eigenvalues of the partial
    # transpose of the maximally entangled projector are +-1/d and 1/d
    pt = iv.partial_transpose(iv.max_entangled_projector(2), {2})
    w = np.linalg.eigvalsh(pt.mat)
    assert abs(w[0] + 0.5) < 1e-14
    assert abs(iv.min_eigenvalue(pt) + 0.5) < 1e-12


def test_min_eigenvalue_scalar_matrix():
    assert abs(iv.min_eigenvalue(iv.identity(2, 2) / 4) - 0.25) < 1e-15


def test_min_eigenvalue_rejects_non_hermitian():
    m = np.zeros((2, 2), dtype=complex)
    m[0, 1] = 1.0
    with pytest.raises(ValueError):
        iv.min_eigenvalue(Operator(2, 1, m))


def test_min_eigenvalue_certificate_residual():
    rho = random_hermitian(2, 2, 6)
    lam = iv.min_eigenvalue(rho)
    w, v = np.linalg.eigh(rho.mat)
    vec = v[:, 0]
    residual = np.linalg.norm(rho.mat @ vec - lam * vec)
    assert residual <= 1e-9 * np.linalg.norm(rho.mat)


# --- frobenius distance ---------------------------------------------------


def test_frobenius_distance():
    a = random_hermitian(2, 1, 7)
    assert iv.frobenius_distance(a, a) == 0.0
    zero = Operator(2, 1, np.zeros((2, 2)))
    assert abs(iv.frobenius_distance(iv.identity(2, 1), zero) - np.sqrt(2)) < 1e-15
    # orthogonal projectors of ranks 3 and 1: distance sqrt(3 + 1) = 2
    d = iv.frobenius_distance(iv.werner_projector(2, 0), iv.werner_projector(2, 1))
    assert abs(d - 2.0) < 1e-14
    with pytest.raises(ValueError):
        iv.frobenius_distance(iv.identity(2, 1), iv.identity(2, 2))


# --- haar sampling --------------------------------------------------------


def test_haar_unitarity():
    for d in (2, 3, 4):
        u = iv.haar_unitary(d, Rng(0))
        assert np.max(np.abs(u.mat.conj().T @ u.mat - np.eye(d))) <= 1e-12


def test_haar_determinism_and_counter_independence():
    a = iv.haar_unitary(3, Rng(12, 5))
    b = iv.haar_unitary(3, Rng(12, 5))
    assert np.array_equal(a.mat, b.mat)
    c = iv.haar_unitary(3, Rng(12, 6))
    assert not np.array_equal(a.mat, c.mat)
    assert np.array_equal(iv.haar_unitary(3, Rng(12).at(5)).mat, a.mat)


def test_haar_first_moment():
    # Schur orthogonality: averaging U |0><0| U^dag gives I/d
    proj = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    base = Rng(11)
    acc = np.zeros((2, 2), dtype=complex)
    for s in range(10_000):
        u = iv.haar_unitary(2, base.at(s)).mat
        acc += u @ proj @ u.conj().T
    acc /= 10_000
    assert np.max(np.abs(acc - np.eye(2) / 2)) <= 0.03


def test_haar_trace_second_moment():
    # int |Tr U|^2 dU = 1
    base = Rng(11)
    total = 0.0
    for s in range(10_000):
        tr = np.trace(iv.haar_unitary(2, base.at(s)).mat)
        total += (tr * tr.conjugate()).real
    assert abs(total / 10_000 - 1.0) <= 0.05
