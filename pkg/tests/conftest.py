import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def reference_step_matrix(F, N):
    """U = (T- x P0 + T+ x P1)(I x F), assembled from translations and projectors."""
    Tm = np.zeros((N, N))
    Tp = np.zeros((N, N))
    for x in range(N):
        Tm[(x - 1) % N, x] = 1
        Tp[(x + 1) % N, x] = 1
    P0 = np.diag([1.0, 0.0])
    P1 = np.diag([0.0, 1.0])
    shift = np.kron(Tm, P0) + np.kron(Tp, P1)
    return shift @ np.kron(np.eye(N), F)


def random_state(rng, N):
    v = rng.standard_normal(2 * N) + 1j * rng.standard_normal(2 * N)
    return v / np.linalg.norm(v)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda s: (int("".join(c for c in s if c.isdigit())), s)):
            terminalreporter.write_line(RESULTS[key])
