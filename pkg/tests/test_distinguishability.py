"""Tests for the spectral-hull distinguishability machinery."""

import numpy as np
import pytest

from gatecap.canonical import canonical_unitary, eigenphase_vector
from gatecap.distinguishability import (
    d_min_canonical,
    d_min_geometric,
    hull_min_distance,
    hull_optimal_weights,
    is_hermitian_canonical,
    is_hermitian_strict,
    min_overlap,
    verify_theorem,
    verify_theorem_quartic,
)
from gatecap.entanglement import is_perfect_entangler
from gatecap.linalg import eig_unitary, haar_random_unitary

PI_4 = np.pi / 4


def test_hull_single_point():
    assert hull_min_distance([0, 0, 0, 0]).d_min == 1.0


def test_hull_antipodal():
    assert hull_min_distance([0, np.pi]).d_min == 0.0


def test_hull_chord():
    assert abs(hull_min_distance([-PI_4, PI_4]).d_min - np.cos(PI_4)) <= 1e-12


def test_hull_rejects_empty():
    with pytest.raises(ValueError):
        hull_min_distance([])


def test_hull_optimal_weights_attain_distance():
    rng = np.random.default_rng(67)
    for _ in range(50):
        phases = rng.uniform(-np.pi, np.pi, 4)
        weights, d_min = hull_optimal_weights(phases)
        assert weights.min() >= 0
        assert abs(weights.sum() - 1) <= 1e-12
        attained = np.abs(np.sum(weights * np.exp(1j * phases)))
        assert abs(attained - d_min) <= 1e-9


def test_d_min_canonical_cases():
    assert d_min_canonical([PI_4, 0, 0]) == 0.0
    assert abs(d_min_canonical([np.pi / 8, 0, 0]) - np.cos(PI_4)) <= 1e-12
    assert abs(d_min_canonical([PI_4, PI_4, PI_4]) - 1.0) <= 1e-12


def test_d_min_closed_matches_geometry():
    rng = np.random.default_rng(71)
    for _ in range(200):
        ax, ay = np.sort(rng.uniform(0, PI_4, 2))[::-1]
        d = np.array([ax, ay, rng.uniform(-ay, ay)])
        assert abs(d_min_canonical(d) - d_min_geometric(d)) <= 1e-10


def test_min_overlap_examples():
    eye = np.eye(4, dtype=complex)
    assert min_overlap(eye, eye) == 1.0
    assert min_overlap(eye, np.diag([1, -1, 1, 1]).astype(complex)) == 0.0
    u_d = canonical_unitary([np.pi / 8, 0, 0])
    assert abs(min_overlap(u_d.conj().T, u_d) - np.cos(PI_4)) <= 1e-12


def test_verify_theorem_examples():
    assert verify_theorem([0, 0, 0]).residual <= 1e-12
    assert verify_theorem([np.pi / 8, 0, 0]).residual <= 1e-12
    assert verify_theorem([np.pi / 8, 0, 0], route="geometric").residual <= 1e-12


def test_verify_theorem_quartic():
    assert verify_theorem_quartic([np.pi / 8, 0, 0]).residual <= 1e-12
    assert verify_theorem_quartic([0.2, 0.1, -0.05], route="geometric").residual <= 1e-9


def test_verify_theorem_unknown_route():
    with pytest.raises(ValueError):
        verify_theorem([0, 0, 0], route="mystery")


def test_perfect_entangler_iff_zero_distance():
    rng = np.random.default_rng(73)
    for _ in range(200):
        ax, ay = np.sort(rng.uniform(0, PI_4, 2))[::-1]
        d = np.array([ax, ay, rng.uniform(0, ay)])
        assert is_perfect_entangler(d) == (d_min_canonical(d) <= 1e-10)


def test_unit_distance_implies_degenerate_square():
    d = [PI_4, PI_4, PI_4]
    assert d_min_canonical(d) == 1.0
    u_d = canonical_unitary(d)
    phases = eig_unitary(u_d @ u_d).phases
    assert np.max(phases) - np.min(phases) <= 1e-8


def test_hermiticity_cases():
    assert is_hermitian_canonical([0, 0, 0])
    assert is_hermitian_canonical([PI_4, PI_4, PI_4])
    assert not is_hermitian_canonical([np.pi / 8, 0, 0])
    assert is_hermitian_strict([0, 0, 0])
    assert not is_hermitian_strict([PI_4, PI_4, PI_4])


def test_mirror_symmetry_of_d_min():
    rng = np.random.default_rng(79)
    for _ in range(50):
        ax, ay = np.sort(rng.uniform(0, PI_4, 2))[::-1]
        az = rng.uniform(0, ay)
        assert d_min_canonical([ax, ay, -az]) == d_min_canonical([ax, ay, az])


def test_theorem_on_haar_samples():
    from gatecap.canonical import cartan_decompose

    rng = np.random.default_rng(83)
    for _ in range(100):
        form = cartan_decompose(haar_random_unitary(4, rng))
        assert verify_theorem(form.d, route="geometric").residual <= 1e-9
