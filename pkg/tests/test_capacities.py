"""Tests for the classical-capacity formulas and the two capacity relations."""

import numpy as np
import pytest

from gatecap.capacities import (
    c1_two_pure,
    c_inf_two_pure,
    ensemble_entropy_two_pure,
    relation1_signals,
    verify_relation1,
    verify_relation2,
)
from gatecap.entanglement import concurrence
from gatecap.linalg import random_pure_state
from gatecap.oracle import SearchConfig

PI_4 = np.pi / 4
FAST = SearchConfig(coarse_grid_per_angle=10, restarts=8)


def test_c1_endpoints():
    assert c1_two_pure(0.0) == 1.0
    assert c1_two_pure(1.0) == 0.0
    assert abs(c1_two_pure(0.70711) - 0.3991) <= 1e-4


def test_c_inf_endpoints():
    assert c_inf_two_pure(0.0) == 1.0
    assert c_inf_two_pure(1.0) == 0.0
    assert abs(c_inf_two_pure(0.70711) - 0.6009) <= 1e-4


def test_capacity_range_checks():
    with pytest.raises(ValueError):
        c1_two_pure(1.5)
    with pytest.raises(ValueError):
        c_inf_two_pure(-0.1)
    with pytest.raises(ValueError):
        ensemble_entropy_two_pure(2.0, 0.5)


def test_collective_never_below_first_order():
    for s in np.linspace(0, 1, 1001):
        assert c_inf_two_pure(s) >= c1_two_pure(s) - 1e-12


def test_ensemble_entropy_values():
    assert ensemble_entropy_two_pure(1.0, 0.3) == 0.0
    assert ensemble_entropy_two_pure(0.5, 0.0) == 1.0
    assert abs(ensemble_entropy_two_pure(0.5, 0.70711) - 0.6009) <= 1e-4


def test_ensemble_entropy_maximized_at_half():
    for s in np.linspace(0, 1, 21):
        best = ensemble_entropy_two_pure(0.5, s)
        for p in np.linspace(0, 1, 21):
            assert ensemble_entropy_two_pure(p, s) <= best + 1e-12


def test_relation1_signal_overlap_is_concurrence():
    rng = np.random.default_rng(107)
    for _ in range(20):
        psi_a = random_pure_state(2, rng)
        psi_b = random_pure_state(2, rng)
        d = np.sort(rng.uniform(0, PI_4, 3))[::-1]
        pair = relation1_signals(d, psi_a, psi_b)
        assert abs(pair.overlap - concurrence(pair.psi1)) <= 1e-12


def test_relation1_identity_triple():
    pair = relation1_signals([0, 0, 0], np.array([1, 0]), np.array([1, 0]))
    assert pair.overlap <= 1e-12


def test_relation1_residuals():
    assert verify_relation1([0, 0, 0], FAST).relation_residual <= 1e-9
    assert verify_relation1([np.pi / 8, 0, 0], FAST).relation_residual <= 1e-3
    assert verify_relation1([PI_4, 0, 0], FAST).relation_residual <= 1e-3


def test_relation2_residuals():
    assert verify_relation2([0, 0, 0], FAST).relation_residual <= 1e-9
    assert verify_relation2([np.pi / 8, 0, 0], FAST).relation_residual <= 1e-3
    assert verify_relation2([PI_4, 0, 0], FAST).relation_residual <= 1e-3


def test_relation2_random_triples():
    rng = np.random.default_rng(109)
    for _ in range(5):
        ax, ay = np.sort(rng.uniform(0, PI_4, 2))[::-1]
        d = np.array([ax, ay, rng.uniform(-ay, ay)])
        assert verify_relation2(d, FAST).relation_residual <= 1e-3
