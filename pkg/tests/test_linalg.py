"""Tests for the dense linear-algebra core."""

import numpy as np
import pytest

from gatecap.linalg import (
    DimensionMismatchError,
    NotUnitaryError,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    check_state,
    check_unitary,
    eig_unitary,
    haar_random_unitary,
    is_unitary,
    kron,
    multiply,
    random_product_state,
    random_pure_state,
    unitarity_defect,
)


def test_multiply_identity():
    eye = np.eye(4, dtype=complex)
    assert np.allclose(multiply(eye, eye), eye)


def test_multiply_unitary_adjoint_is_identity():
    rng = np.random.default_rng(3)
    u = haar_random_unitary(4, rng)
    assert np.max(np.abs(multiply(u, u.conj().T) - np.eye(4))) <= 1e-12


def test_multiply_pauli_product():
    assert np.allclose(multiply(PAULI_X, PAULI_Y), 1j * PAULI_Z)


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        multiply(np.eye(2, dtype=complex), np.eye(4, dtype=complex))


def test_kron_identities():
    assert np.allclose(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_sz_identity():
    assert np.allclose(kron(PAULI_Z, np.eye(2)), np.diag([1, 1, -1, -1]))


def test_kron_sy_sy_antidiagonal():
    expected = np.zeros((4, 4))
    expected[0, 3], expected[1, 2], expected[2, 1], expected[3, 0] = -1, 1, 1, -1
    assert np.allclose(kron(PAULI_Y, PAULI_Y), expected)


def test_kron_mixed_product_property():
    rng = np.random.default_rng(5)
    a, b, c, d = (haar_random_unitary(2, rng) for _ in range(4))
    assert np.max(np.abs(kron(a, b) @ kron(c, d) - kron(a @ c, b @ d))) <= 1e-12


def test_eig_unitary_identity():
    decomp = eig_unitary(np.eye(4, dtype=complex))
    assert np.allclose(decomp.phases, 0.0)


def test_eig_unitary_diagonal_phases():
    v = np.diag([1, 1j, -1, -1j]).astype(complex)
    decomp = eig_unitary(v)
    assert np.allclose(np.sort(decomp.phases), [-np.pi / 2, 0.0, np.pi / 2, np.pi])


def test_eig_unitary_reconstruction():
    rng = np.random.default_rng(11)
    for _ in range(50):
        u = haar_random_unitary(4, rng)
        decomp = eig_unitary(u)
        assert np.max(np.abs(decomp.reconstruct() - u)) <= 1e-9
        # orthonormality
        v = decomp.vectors
        assert np.max(np.abs(v.conj().T @ v - np.eye(4))) <= 1e-10


def test_eig_unitary_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        eig_unitary(np.ones((4, 4), dtype=complex))


def test_haar_deterministic_per_seed():
    u1 = haar_random_unitary(4, np.random.default_rng(7))
    u2 = haar_random_unitary(4, np.random.default_rng(7))
    assert np.array_equal(u1, u2)


def test_haar_is_unitary():
    rng = np.random.default_rng(9)
    for dim in (2, 4):
        assert unitarity_defect(haar_random_unitary(dim, rng)) <= 1e-12


def test_haar_first_moment():
    # <|U[0,0]|^2> = 1/dim for Haar measure.
    rng = np.random.default_rng(13)
    samples = np.array([np.abs(haar_random_unitary(2, rng)[0, 0]) ** 2
                        for _ in range(20000)])
    # variance of |U00|^2 for dim 2 is 1/12; 3 sigma of the mean
    assert abs(samples.mean() - 0.5) <= 3 * np.sqrt(1 / 12 / samples.size)


def test_random_states_normalized_and_deterministic():
    psi1 = random_pure_state(4, np.random.default_rng(21))
    psi2 = random_pure_state(4, np.random.default_rng(21))
    assert np.array_equal(psi1, psi2)
    assert abs(np.linalg.norm(psi1) - 1.0) <= 1e-12
    prod = random_product_state(np.random.default_rng(22))
    assert abs(np.linalg.norm(prod) - 1.0) <= 1e-12


def test_check_state_rejects_unnormalized():
    with pytest.raises(ValueError):
        check_state(np.array([1.0, 1.0, 0.0, 0.0]))


def test_check_unitary_rejects_bad_dimension():
    with pytest.raises(DimensionMismatchError):
        check_unitary(np.eye(3, dtype=complex))


def test_is_unitary_on_non_square():
    assert not is_unitary(np.ones((2, 3)))
