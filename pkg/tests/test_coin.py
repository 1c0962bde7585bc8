import numpy as np
import pytest
from hypothesis import given, strategies as st

from coinwalk.coin import CoinParams, build_coin, build_coin_bare, hadamard_params
from coinwalk.errors import DomainError
from coinwalk.spectrum import degeneracy_report

angles = st.floats(-20, 20, allow_nan=False)
biases = st.floats(0, 1)


def test_identity_coin():
    np.testing.assert_allclose(build_coin(CoinParams(1.0, 0.0, 0.0, 4)), np.eye(2), atol=1e-15)


def test_off_diagonal_coin():
    np.testing.assert_allclose(build_coin(CoinParams(0.0, 0.0, 0.0, 4)), [[0, 1], [-1, 0]], atol=1e-15)


def test_hadamard_family_coin():
    F = build_coin(hadamard_params(8))
    np.testing.assert_allclose(np.abs(F), np.full((2, 2), 2 ** -0.5), atol=1e-15)
    np.testing.assert_allclose(F @ F.conj().T, np.eye(2), atol=1e-15)
    # the parameterisation reproduces the textbook Hadamard matrix exactly
    np.testing.assert_allclose(F, np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)


@pytest.mark.parametrize("R", [-0.1, 1.0 + 1e-9, float("nan")])
def test_bias_out_of_range(R):
    with pytest.raises(DomainError):
        CoinParams(R, 0.0, 0.0, 4)


def test_lattice_size_validation():
    with pytest.raises(DomainError):
        CoinParams(0.5, 0.0, 0.0, 1)
    with pytest.raises(DomainError):
        CoinParams(0.5, 0.0, 0.0, 2.5)


def test_angles_normalised():
    p = CoinParams(0.3, -np.pi / 2, 5 * np.pi, 6)
    assert p.alpha == pytest.approx(3 * np.pi / 2)
    assert p.beta == pytest.approx(np.pi)
    assert 0 <= p.alpha < 2 * np.pi


def test_alpha_n_is_exact():
    p = CoinParams.from_alpha_n(13, 5, 0.4)
    assert p.alpha_n == 3
    assert p.alpha == pytest.approx(3 * np.pi / 5)
    assert p.with_alpha(0.1).alpha_n is None


@pytest.mark.parametrize("N", [4, 20])
def test_hadamard_params_values(N):
    p = hadamard_params(N)
    assert (p.R, p.N) == (0.5, N)
    assert p.alpha == pytest.approx(3 * np.pi / 2, abs=1e-15)
    assert p.beta == pytest.approx(np.pi / 2, abs=1e-15)


def test_hadamard_degeneracy_downstream():
    r4 = degeneracy_report(hadamard_params(4))
    assert r4.is_degenerate and len(r4.unique_ks) == 2
    assert not degeneracy_report(hadamard_params(5)).is_degenerate


@given(biases, angles, angles)
def test_unitarity_and_determinant(R, a, b):
    F = build_coin(CoinParams(R, a, b, 3))
    assert np.max(np.abs(F @ F.conj().T - np.eye(2))) < 1e-12
    assert np.max(np.abs(F.conj().T @ F - np.eye(2))) < 1e-12
    assert abs(abs(np.linalg.det(F)) - 1) < 1e-12


@given(biases, angles, angles)
def test_global_phase_factors_out(R, a, b):
    p = CoinParams(R, a, b, 3)
    np.testing.assert_allclose(build_coin(p) / np.exp(1j * p.beta), build_coin_bare(p), atol=1e-14)
