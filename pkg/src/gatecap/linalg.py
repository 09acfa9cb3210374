"""Dense complex linear algebra for 2x2 and 4x4 matrices.

Provides the matrix primitives the rest of the package is built on:
products, Kronecker products, unitarity checks, eigendecomposition of
unitary matrices with orthonormal eigenvectors even for degenerate
spectra, and seeded Haar-random sampling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNITARITY_TOL = 1e-10
STATE_NORM_TOL = 1e-12
PHASE_CLUSTER_TOL = 1e-8

I2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

SIGMA_YY = np.kron(PAULI_Y, PAULI_Y)


class DimensionMismatchError(ValueError):
    """Operands have incompatible or unsupported dimensions."""


class NotUnitaryError(ValueError):
    """A matrix failed the unitarity check."""


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def wrap_angle(theta):
    """Map angles to the interval (-pi, pi]."""
    wrapped = np.mod(np.asarray(theta) + np.pi, 2 * np.pi) - np.pi
    wrapped = np.where(wrapped == -np.pi, np.pi, wrapped)
    if np.isscalar(theta):
        return float(wrapped)
    return wrapped


def unitarity_defect(u: np.ndarray) -> float:
    """Max-norm of U^dag U - I."""
    u = np.asarray(u, dtype=complex)
    return float(np.max(np.abs(dagger(u) @ u - np.eye(u.shape[0]))))


def is_unitary(u: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return unitarity_defect(u) <= tol


def check_unitary(u: np.ndarray, tol: float = UNITARITY_TOL) -> np.ndarray:
    """Validate and return a unitary matrix of dimension 2 or 4."""
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {u.shape}")
    if u.shape[0] not in (2, 4):
        raise DimensionMismatchError(f"only dimensions 2 and 4 are supported, got {u.shape[0]}")
    if not np.all(np.isfinite(u)):
        raise ValueError("matrix contains non-finite entries")
    defect = unitarity_defect(u)
    if defect > tol:
        raise NotUnitaryError(f"matrix is not unitary: max |U^dag U - I| = {defect:.3e}")
    return u


def check_state(psi: np.ndarray, tol: float = STATE_NORM_TOL) -> np.ndarray:
    """Validate and return a normalized pure state of dimension 2 or 4."""
    psi = np.asarray(psi, dtype=complex).ravel()
    if psi.shape[0] not in (2, 4):
        raise DimensionMismatchError(f"only dimensions 2 and 4 are supported, got {psi.shape[0]}")
    if not np.all(np.isfinite(psi)):
        raise ValueError("state contains non-finite amplitudes")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"state is not normalized: |norm - 1| = {abs(norm - 1):.3e}")
    return psi


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of two equal-dimension matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 matrices into a 4x4 matrix."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise DimensionMismatchError("kron expects two 2x2 matrices")
    return np.kron(a, b)


def kron_state(psi_a: np.ndarray, psi_b: np.ndarray) -> np.ndarray:
    """Tensor product of two single-qubit states into a two-qubit state."""
    psi_a = np.asarray(psi_a, dtype=complex).ravel()
    psi_b = np.asarray(psi_b, dtype=complex).ravel()
    if psi_a.shape != (2,) or psi_b.shape != (2,):
        raise DimensionMismatchError("kron_state expects two 2-dimensional states")
    return np.kron(psi_a, psi_b)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Spectral form of a unitary: phases in (-pi, pi] and orthonormal eigenvectors.

    Eigenvectors are the columns of ``vectors``; ``phases`` is sorted
    ascending and ``vectors[:, j]`` belongs to eigenvalue ``exp(1j * phases[j])``.
    """

    phases: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * np.exp(1j * self.phases)) @ dagger(self.vectors)


def _cluster_bounds(values: np.ndarray, tol: float):
    """Split sorted values into maximal runs of near-equal entries."""
    bounds = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > tol:
            bounds.append((start, i))
            start = i
    return bounds


def simultaneous_diagonalize(h1: np.ndarray, h2: np.ndarray,
                             cluster_tol: float = PHASE_CLUSTER_TOL) -> np.ndarray:
    """Common eigenbasis of two commuting Hermitian (or real symmetric) matrices.

    Diagonalizes ``h1`` first, then re-diagonalizes ``h2`` restricted to each
    degenerate eigenspace of ``h1``.  For real symmetric inputs the returned
    eigenvector matrix is real orthogonal.
    """
    w, p = np.linalg.eigh(h1)
    vecs = p.copy()
    for i0, i1 in _cluster_bounds(w, cluster_tol):
        if i1 - i0 > 1:
            block = p[:, i0:i1]
            h2b = dagger(block) @ h2 @ block if np.iscomplexobj(h1) else block.T @ h2 @ block
            h2b = (h2b + (dagger(h2b) if np.iscomplexobj(h1) else h2b.T)) / 2
            _, q = np.linalg.eigh(h2b)
            vecs[:, i0:i1] = block @ q
    return vecs


def eig_unitary(u: np.ndarray, tol: float = UNITARITY_TOL,
                cluster_tol: float = PHASE_CLUSTER_TOL) -> SpectralDecomposition:
    """Eigendecomposition of a unitary matrix with orthonormal eigenvectors.

    Works through the commuting Hermitian pair (U + U^dag)/2 and
    (U - U^dag)/2i, which stays well conditioned for the 2- and 4-fold
    degenerate spectra produced by canonical two-qubit operators.
    """
    u = check_unitary(u, tol=tol)
    h1 = (u + dagger(u)) / 2
    h2 = (u - dagger(u)) / 2j
    vecs = simultaneous_diagonalize(h1, h2, cluster_tol=cluster_tol)
    eigvals = np.einsum("ij,ik,kj->j", vecs.conj(), u, vecs)
    moduli = np.abs(eigvals)
    if np.max(np.abs(moduli - 1.0)) > 1e-10:
        raise NotUnitaryError("eigendecomposition failed to converge to unit-modulus eigenvalues")
    phases = wrap_angle(np.angle(eigvals))
    order = np.argsort(phases, kind="stable")
    decomp = SpectralDecomposition(phases=phases[order], vectors=vecs[:, order])
    residual = np.max(np.abs(decomp.reconstruct() - u))
    if residual > 1e-9:
        raise NotUnitaryError(f"eigendecomposition residual {residual:.3e} exceeds 1e-9")
    return decomp


def haar_random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed random unitary via Ginibre QR with phase correction."""
    if dim not in (2, 4):
        raise DimensionMismatchError(f"only dimensions 2 and 4 are supported, got {dim}")
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_pure_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Normalized state with Haar-uniform direction."""
    if dim not in (2, 4):
        raise DimensionMismatchError(f"only dimensions 2 and 4 are supported, got {dim}")
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_product_state(rng: np.random.Generator) -> np.ndarray:
    """Random two-qubit product state (tensor product of single-qubit states)."""
    return kron_state(random_pure_state(2, rng), random_pure_state(2, rng))
