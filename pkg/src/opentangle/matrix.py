"""Fixed-size complex linear algebra for two-qubit operators.

Matrices are plain complex ``numpy`` arrays of shape (2, 2) or (4, 4); most
routines also accept stacks of shape (..., 4, 4). Indices are (row, column)
and the two-qubit basis is ordered |00>, |01>, |10>, |11> with subsystem A as
the left tensor factor, so that ``kron(a, b)[2*i + k, 2*j + l] == a[i, j] * b[k, l]``.
"""
import numpy as np

from .errors import NotHermitian
from .tolerances import (
    HERMITIAN_TOL,
    JACOBI_MAX_SWEEPS,
    JACOBI_TOL,
    UNITARY_TOL,
)

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

CNOT = np.array(
    [[1, 0, 0, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1],
     [0, 0, 1, 0]], dtype=complex)

SWAP = np.array(
    [[1, 0, 0, 0],
     [0, 0, 1, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1]], dtype=complex)


def multiply(a, b):
    return np.matmul(a, b)


def adjoint(m):
    """Conjugate transpose (acts on the last two axes)."""
    return np.conj(np.swapaxes(m, -1, -2))


def kron(a, b):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"kron expects two 2x2 matrices, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def unitarity_defect(m):
    """Frobenius norm of ``m m^dagger - I`` (vectorized over leading axes)."""
    m = np.asarray(m, dtype=complex)
    eye = np.eye(m.shape[-1])
    return np.linalg.norm(m @ adjoint(m) - eye, axis=(-2, -1))


def is_unitary(m, tol=UNITARY_TOL):
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    if not np.all(np.isfinite(m)):
        return False
    return bool(unitarity_defect(m) <= tol)


def _off_diagonal_mass(a):
    n = a.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[..., mask]) ** 2, axis=-1))


def _jacobi_angle(alpha, beta, g):
    """tan of the rotation angle that annihilates the real coupling ``g``.

    Smaller root of t^2 + 2 zeta t - 1 = 0, zeta = (beta - alpha) / (2 g).
    Entries with ``g == 0`` get t = 0.
    """
    safe_g = np.where(g > 0, g, 1.0)
    zeta = (beta - alpha) / (2.0 * safe_g)
    sign = np.where(zeta >= 0, 1.0, -1.0)
    t = sign / (np.abs(zeta) + np.hypot(1.0, zeta))
    return np.where(g > 0, t, 0.0)


def _hermitian_jacobi(a):
    """Cyclic complex Jacobi on a stack of Hermitian matrices, in place.

    Each (p, q) step first rotates the phase of column q so the coupling is
    real, then applies a real Givens rotation. Stops when the off-diagonal
    Frobenius mass is below ``JACOBI_TOL`` times the matrix norm.
    """
    n = a.shape[-1]
    scale = np.linalg.norm(a, axis=(-2, -1))
    scale = np.where(scale > 0, scale, 1.0)
    for sweep in range(JACOBI_MAX_SWEEPS):
        if np.all(_off_diagonal_mass(a) <= JACOBI_TOL * scale):
            return a, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[..., p, q]
                g = np.abs(apq)
                phase = np.where(g > 0, apq / np.where(g > 0, g, 1.0), 1.0)
                t = _jacobi_angle(a[..., p, p].real, a[..., q, q].real, g)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rot = np.broadcast_to(np.eye(n, dtype=complex), a.shape).copy()
                rot[..., p, p] = c
                rot[..., p, q] = s
                rot[..., q, p] = -s * np.conj(phase)
                rot[..., q, q] = c * np.conj(phase)
                a = adjoint(rot) @ a @ rot
    if np.all(_off_diagonal_mass(a) <= JACOBI_TOL * scale):
        return a, JACOBI_MAX_SWEEPS
    raise RuntimeError(f"Jacobi eigensolver did not converge in {JACOBI_MAX_SWEEPS} sweeps")


def hermitian_eigenvalues(m, return_sweeps=False):
    """Eigenvalues of a Hermitian 4x4 matrix, sorted descending.

    Uses cyclic Jacobi rotations; convergence threshold is an off-diagonal
    Frobenius mass of ``1e-14`` relative to ``||m||_F``. Works on stacks of
    shape (..., n, n) as well. Raises :class:`NotHermitian` if
    ``||m - m^dagger||_F`` exceeds 1e-9.
    """
    m = np.asarray(m, dtype=complex)
    defect = np.max(np.linalg.norm(m - adjoint(m), axis=(-2, -1)), initial=0.0)
    if defect > HERMITIAN_TOL:
        raise NotHermitian(defect, HERMITIAN_TOL)
    a = 0.5 * (m + adjoint(m))
    a, sweeps = _hermitian_jacobi(a)
    evals = np.sort(np.diagonal(a, axis1=-2, axis2=-1).real, axis=-1)[..., ::-1]
    if return_sweeps:
        return evals, sweeps
    return evals


def singular_values(m, return_sweeps=False):
    """Singular values, descending, by one-sided (Hestenes) Jacobi.

    Columns are orthogonalized pairwise by complex rotations until every pair
    satisfies ``|a_p^H a_q| <= 1e-14 * ||a_p|| ||a_q||``; the singular values
    are then the column norms. Zero singular values come out at the level of
    ``eps * ||m||`` rather than ``sqrt(eps) * ||m||`` as they would from the
    eigenvalues of ``m m^dagger``.
    """
    a = np.array(m, dtype=complex)
    n = a.shape[-1]
    # inner products below (eps ||m||)^2 are rounding noise; rotating on them
    # divides by denormals
    floor = (np.finfo(float).eps * np.linalg.norm(a, axis=(-2, -1))) ** 2
    for sweep in range(JACOBI_MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                x = a[..., :, p].copy()
                y = a[..., :, q].copy()
                alpha = np.sum(np.abs(x) ** 2, axis=-1)
                beta = np.sum(np.abs(y) ** 2, axis=-1)
                gamma = np.sum(np.conj(x) * y, axis=-1)
                g = np.abs(gamma)
                active = (g > JACOBI_TOL * np.sqrt(alpha * beta)) & (g > floor)
                if not np.any(active):
                    continue
                rotated = True
                g = np.where(active, g, 0.0)
                phase = np.where(active, gamma / np.where(active, g, 1.0), 1.0)
                t = _jacobi_angle(alpha, beta, g)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                yr = y * np.conj(phase)[..., None]
                a[..., :, p] = c[..., None] * x - s[..., None] * yr
                a[..., :, q] = s[..., None] * x + c[..., None] * yr
        if not rotated:
            sv = np.sort(np.linalg.norm(a, axis=-2), axis=-1)[..., ::-1]
            return (sv, sweep) if return_sweeps else sv
    raise RuntimeError(f"one-sided Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")


def haar_random_unitaries(count, dim, seed):
    """Stack of ``count`` Haar-distributed ``dim x dim`` unitaries.

    QR of a complex Ginibre matrix, with each column of Q multiplied by the
    phase of the matching diagonal entry of R so the factorization (and hence
    the distribution) is unique.
    """
    rng = np.random.default_rng(seed)
    shape = (count, dim, dim)
    z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def haar_random_unitary4(seed):
    return haar_random_unitaries(1, 4, seed)[0]


def haar_random_unitary2(seed):
    return haar_random_unitaries(1, 2, seed)[0]
