import numpy as np
import pytest

PAULIS = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]

ACCEPTANCE_LINES = []


def pauli_schmidt_spectrum(u):
    """Oracle: Schmidt coefficients from the Pauli expansion, no reshuffling.

    u = sum_ij t_ij sigma_i (x) sigma_j with t_ij = tr((sigma_i (x) sigma_j) u) / 4.
    In the orthonormal basis sigma / sqrt(2) the coefficient matrix is 2 t, so the
    operator-Schmidt coefficients are its singular values (LAPACK here).
    """
    t = np.array([[np.trace(np.kron(a, b) @ u) / 4 for b in PAULIS] for a in PAULIS])
    return np.linalg.svd(2 * t, compute_uv=False)


def random_chamber_point(rng):
    c1 = rng.uniform(0, np.pi / 4)
    c2 = rng.uniform(0, c1)
    c3 = rng.uniform(-c2, c2)
    return np.array([c1, c2, c3])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
