"""Canonical class vector of an arbitrary two-qubit unitary.

In the magic basis every SU(2) x SU(2) product becomes a real orthogonal
matrix and U_d becomes diagonal. For m = Q^dag U Q with det U = 1 the
symmetric unitary m^T m therefore has eigenvalues exp(-2i lambda_j), where the
lambda_j are the eigenphases of U_d on the four Bell states:

    Phi+ : c1 - c2 + c3        Psi+ : c1 + c2 - c3
    Phi- : -c1 + c2 + c3       Psi- : -c1 - c2 - c3

Any relabeling of the lambda_j, or shift of one of them by pi, corresponds to a
Weyl-group symmetry of (c1, c2, c3), so the class vector can be read off from
the eigenvalues alone and then folded into the Weyl chamber.
"""
import numpy as np

from .canonical import CanonicalParams, build_ud, reduce_to_weyl_chamber
from .errors import ExtractionFailed, NotUnitary
from .matrix import adjoint, unitarity_defect
from .schmidt import schmidt_spectrum_svd
from .tolerances import KAK_VERIFY_TOL, UNITARY_TOL

#: Columns: Phi+, i Psi+, Psi-, i Phi- (each normalized).
MAGIC = np.array(
    [[1, 0, 0, 1j],
     [0, 1j, 1, 0],
     [0, 1j, -1, 0],
     [1, 0, 0, -1j]], dtype=complex) / np.sqrt(2.0)
MAGIC_DAG = adjoint(MAGIC)

_ENTRY_PHASE_FLOOR = 1e-12


def _require_unitary(u):
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {u.shape}")
    defect = float(unitarity_defect(u))
    if not np.isfinite(defect) or defect > UNITARY_TOL:
        raise NotUnitary(defect, UNITARY_TOL)
    return u


def to_magic_basis(u):
    return MAGIC_DAG @ u @ MAGIC


def global_phase_normalize(u):
    """Rescale ``u`` to determinant 1.

    Multiplies by exp(-i arg(det u) / 4) with arg in (-pi, pi]. Of the four
    determinant-1 representatives (differing by powers of i) the one whose
    (0, 0) entry has argument in (-pi/4, pi/4] is returned, when that entry is
    nonzero.
    """
    u = _require_unitary(u)
    det = np.linalg.det(u)
    v = u * np.exp(-1j * np.angle(det) / 4)
    if abs(v[0, 0]) > _ENTRY_PHASE_FLOOR:
        k = np.ceil((np.angle(v[0, 0]) - np.pi / 4) / (np.pi / 2))
        v = v * np.exp(-1j * k * np.pi / 2)
    return v


def makhlin_invariants(u):
    """Local invariants (G1 complex, G2 real) of a two-qubit unitary.

    G1 = tr^2(m) / (16 det u), G2 = (tr^2(m) - tr(m^2)) / (4 det u), with
    m = (Q^dag u Q)^T (Q^dag u Q). Two gates are locally equivalent iff their
    invariants agree.
    """
    u = np.asarray(u, dtype=complex)
    ub = to_magic_basis(u)
    m = ub.T @ ub
    det = np.linalg.det(u)
    tr = np.trace(m)
    g1 = tr ** 2 / (16 * det)
    g2 = (tr ** 2 - np.trace(m @ m)) / (4 * det)
    return complex(g1), float(g2.real)


def _class_vector_from_phases(theta):
    lam = np.sort(-0.5 * np.asarray(theta))
    c1 = 0.5 * (lam[0] + lam[2])
    c2 = 0.5 * (lam[1] + lam[2])
    c3 = 0.5 * (lam[0] + lam[1])
    return reduce_to_weyl_chamber((c1, c2, c3))


def _passes_check(u, p, spectrum, invariants):
    candidate = build_ud(p)
    s = schmidt_spectrum_svd(candidate)
    if np.max(np.abs(np.subtract(s, spectrum))) > KAK_VERIFY_TOL:
        return False
    g1, g2 = makhlin_invariants(candidate)
    return abs(g1 - invariants[0]) <= KAK_VERIFY_TOL and abs(g2 - invariants[1]) <= KAK_VERIFY_TOL


def extract_class_vector(u):
    """Weyl-chamber class vector (c1, c2, c3) of a 4x4 unitary.

    Every result is verified: U_d(c) must reproduce the operator-Schmidt
    spectrum and the local invariants of ``u`` within 1e-8. If it does not,
    the extraction is retried with the other three fourth-root-of-unity phase
    representatives (which move the eigenvalue branch cuts) before
    ExtractionFailed is raised.
    """
    u = _require_unitary(u)
    spectrum = schmidt_spectrum_svd(u)
    invariants = makhlin_invariants(u)
    v = global_phase_normalize(u)
    tried = []
    for k in range(4):
        m = to_magic_basis(v * 1j ** k)
        theta = np.angle(np.linalg.eigvals(m.T @ m))
        p = _class_vector_from_phases(theta)
        if _passes_check(u, p, spectrum, invariants):
            return p
        tried.append(tuple(p))
    raise ExtractionFailed(f"no candidate class vector passed verification: {tried}")
