import numpy as np
import pytest

from coinwalk.coin import CoinParams, build_coin, hadamard_params
from coinwalk.errors import DenseLimitError, SizeMismatchError
from coinwalk.operator import (
    StateVector,
    StepOperator,
    apply_step,
    build_dense,
    evolve,
    fourier,
    inverse_fourier,
)

from conftest import random_state, reference_step_matrix

IDENTITY = CoinParams(1.0, 0.0, 0.0, 2)


def test_pure_shift_right():
    out = apply_step(StepOperator.from_params(IDENTITY), StateVector.basis_state(2, 0, 1))
    np.testing.assert_array_equal(out.amplitudes, StateVector.basis_state(2, 1, 1).amplitudes)


def test_pure_shift_left_wraps():
    out = apply_step(StepOperator.from_params(IDENTITY), StateVector.basis_state(2, 0, 0))
    np.testing.assert_array_equal(out.amplitudes, StateVector.basis_state(2, 1, 0).amplitudes)


def test_hadamard_three_steps():
    p = hadamard_params(4)
    psi0 = StateVector.basis_state(4, 0, 0)
    U = reference_step_matrix(build_coin(p), 4)
    ref = np.linalg.matrix_power(U, 3) @ psi0.amplitudes
    np.testing.assert_allclose(evolve([p] * 3, psi0).amplitudes, ref, atol=1e-13)


def test_hadamard_three_steps_frozen():
    # by hand: |0,0> -> (|3,0>+|1,1>)/sqrt2 -> (|2,0>+|0,1>+|0,0>-|2,1>)/2 -> (|3,0>+|3,1>)/sqrt2
    psi = evolve([hadamard_params(4)] * 3, StateVector.basis_state(4, 0, 0)).grid
    frozen = np.zeros((4, 2), dtype=complex)
    frozen[3] = 2 ** -0.5
    np.testing.assert_allclose(psi, frozen, atol=1e-15)


def test_dense_offdiagonal_coin_sparsity():
    M = build_dense(StepOperator.from_params(CoinParams(0.0, 0.0, 0.0, 2)))
    nz = np.abs(M) > 1e-15
    assert nz.sum() == 4
    np.testing.assert_allclose(np.abs(M[nz]), 1.0)


@pytest.mark.parametrize("N", [2, 3, 5, 16])
def test_dense_matches_reference_and_is_unitary(N, rng):
    p = CoinParams(rng.uniform(), rng.uniform(0, 7), rng.uniform(0, 7), N)
    M = build_dense(StepOperator.from_params(p))
    np.testing.assert_allclose(M, reference_step_matrix(build_coin(p), N), atol=1e-15)
    assert np.max(np.abs(M @ M.conj().T - np.eye(2 * N))) < 1e-10


def test_dense_limit():
    with pytest.raises(DenseLimitError):
        build_dense(StepOperator.from_params(CoinParams(0.5, 0, 0, 600)))
    assert build_dense(StepOperator.from_params(CoinParams(0.5, 0, 0, 20)), limit=20).shape == (40, 40)


def test_hadamard_dense_vs_structured(rng):
    p = hadamard_params(3)
    op = StepOperator.from_params(p)
    psi = StateVector(random_state(rng, 3))
    np.testing.assert_allclose(apply_step(op, psi).amplitudes, build_dense(op) @ psi.amplitudes, atol=1e-13)


def test_structured_dense_agreement_sweep(rng):
    for N in range(2, 33):
        p = CoinParams(rng.uniform(), rng.uniform(0, 7), rng.uniform(0, 7), N)
        op = StepOperator.from_params(p)
        psi = StateVector(random_state(rng, N))
        diff = apply_step(op, psi).amplitudes - build_dense(op) @ psi.amplitudes
        assert np.max(np.abs(diff)) < 1e-12


def test_norm_preservation(rng):
    for _ in range(100):
        N = int(rng.integers(2, 40))
        op = StepOperator.from_params(CoinParams(rng.uniform(), rng.uniform(0, 7), rng.uniform(0, 7), N))
        psi = StateVector(random_state(rng, N))
        assert abs(apply_step(op, psi).norm() - 1.0) < 1e-12


def test_size_mismatch():
    op = StepOperator.from_params(CoinParams(0.5, 0, 0, 4))
    with pytest.raises(SizeMismatchError):
        apply_step(op, StateVector.basis_state(5, 0, 0))


@pytest.mark.parametrize("t", [1, 3, 7])
def test_identity_coin_moves_by_direction(t):
    N = 5
    steps = [CoinParams(1.0, 0.0, 0.0, N)] * t
    for x in range(N):
        out = evolve(steps, StateVector.basis_state(N, x, 0))
        np.testing.assert_array_equal(out.amplitudes, StateVector.basis_state(N, x - t, 0).amplitudes)
        out = evolve(steps, StateVector.basis_state(N, x, 1))
        np.testing.assert_array_equal(out.amplitudes, StateVector.basis_state(N, x + t, 1).amplitudes)


def test_fourier_of_constant():
    N = 6
    grid = np.zeros((N, 2), dtype=complex)
    grid[:, 0] = N ** -0.5
    out = fourier(StateVector.from_grid(grid)).grid
    expected = np.zeros((N, 2))
    expected[0, 0] = 1
    np.testing.assert_allclose(out, expected, atol=1e-15)


def test_fourier_phase_ramp():
    out = fourier(StateVector.basis_state(4, 1, 0)).grid
    k = np.arange(4)
    np.testing.assert_allclose(out[:, 0], np.exp(2j * np.pi * k / 4) / 2, atol=1e-15)
    np.testing.assert_allclose(out[:, 1], 0, atol=1e-15)


def test_fourier_round_trip_and_unitarity(rng):
    for N in (2, 7, 32):
        psi = StateVector(random_state(rng, N))
        f = fourier(psi)
        assert f.basis == "fourier"
        assert abs(f.norm() - 1) < 1e-12
        np.testing.assert_allclose(inverse_fourier(f).amplitudes, psi.amplitudes, atol=1e-13)


def test_fourier_matches_definition(rng):
    N = 5
    psi = StateVector(random_state(rng, N))
    x = np.arange(N)
    ref = np.array([[np.sum(np.exp(2j * np.pi * k * x / N) * psi.grid[:, c]) / np.sqrt(N)
                     for c in (0, 1)] for k in range(N)])
    np.testing.assert_allclose(fourier(psi).grid, ref, atol=1e-14)


def test_evolve_empty_sequence(rng):
    psi = StateVector(random_state(rng, 4))
    np.testing.assert_array_equal(evolve([], psi).amplitudes, psi.amplitudes)


@pytest.mark.parametrize("N,T", [(4, 10), (16, 200), (64, 1000)])
def test_evolve_matches_matrix_power(N, T, rng):
    p = CoinParams(rng.uniform(), rng.uniform(0, 7), rng.uniform(0, 7), N)
    psi = StateVector(random_state(rng, N))
    ref = np.linalg.matrix_power(build_dense(StepOperator.from_params(p)), T) @ psi.amplitudes
    assert np.max(np.abs(evolve([p] * T, psi).amplitudes - ref)) < 1e-10


def test_state_is_immutable(rng):
    psi = StateVector(random_state(rng, 3))
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 1.0
