"""Operator-Schmidt analysis of arbitrary two-qubit unitaries.

Writing U = sum_l s_l A_l (x) B_l with orthonormal operator bases, the
coefficients s_l are the singular values of the reshuffled matrix R(U), whose
rows are indexed by subsystem-A index pairs and columns by subsystem-B pairs.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .canonical import CanonicalParams, SchmidtSpectrum
from .errors import (
    ExtractionFailed,
    InternalConsistencyError,
    NotUnitary,
    SchmidtNumberThree,
)
from .matrix import singular_values, unitarity_defect
from .tolerances import RANK_TOL, TABLE_TOL, UNITARY_TOL

#: Upper bound on linear-entropy operator entanglement per Schmidt number.
ENTANGLEMENT_BOUNDS = {1: 0.0, 2: 0.5, 4: 0.75}


@dataclass(frozen=True)
class OperatorAnalysis:
    spectrum: SchmidtSpectrum
    schmidt_number: int
    entanglement: float
    canonical: Optional[CanonicalParams] = None

    def as_dict(self):
        return {
            "spectrum": list(self.spectrum),
            "schmidt_number": self.schmidt_number,
            "entanglement": self.entanglement,
            "canonical": None if self.canonical is None else list(self.canonical),
        }


def reshuffle(u):
    """R[2i + j, 2k + l] = u[2i + k, 2j + l]; an involution. Works on stacks."""
    u = np.asarray(u)
    lead = u.shape[:-2]
    t = u.reshape(lead + (2, 2, 2, 2))
    n = len(lead)
    axes = tuple(range(n)) + (n, n + 2, n + 1, n + 3)
    return t.transpose(axes).reshape(lead + (4, 4))


def _check_unitary(u, tol=UNITARY_TOL):
    defect = unitarity_defect(u)
    worst = float(np.max(defect, initial=0.0))
    if not np.isfinite(worst) or worst > tol:
        raise NotUnitary(worst, tol)


def schmidt_spectra(us):
    """Operator-Schmidt spectra for a stack of unitaries, shape (n, 4), descending."""
    us = np.asarray(us, dtype=complex)
    _check_unitary(us)
    return singular_values(reshuffle(us))


def schmidt_spectrum_svd(u):
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {u.shape}")
    return SchmidtSpectrum.from_values(schmidt_spectra(u[None])[0])


def schmidt_numbers(spectra):
    s = np.asarray(spectra, dtype=float)
    return np.sum(s > RANK_TOL * s[..., :1], axis=-1)


def schmidt_number(s):
    """Number of coefficients above RANK_TOL * s_1 (raw count; may be 3)."""
    return int(schmidt_numbers(s))


def linear_entropy(s):
    s = np.asarray(s, dtype=float)
    e = 1.0 - np.sum(s ** 4, axis=-1) / 16.0
    return float(e) if np.ndim(e) == 0 else e


def table1_violation(schmidt_num, entanglement, tol=TABLE_TOL):
    """Describe how a (Schmidt number, E) pair breaks the classification, or None."""
    if schmidt_num not in ENTANGLEMENT_BOUNDS:
        return f"Schmidt number {schmidt_num} is impossible for a two-qubit unitary"
    if schmidt_num == 1:
        if entanglement > tol:
            return f"Sch=1 requires E=0, got {entanglement!r}"
        return None
    upper = ENTANGLEMENT_BOUNDS[schmidt_num]
    if not 0.0 < entanglement <= upper + tol:
        return f"Sch={schmidt_num} requires 0 < E <= {upper}, got {entanglement!r}"
    return None


def analyze(u, extract=True):
    """Spectrum, Schmidt number, entanglement and (optionally) class vector of ``u``.

    Raises NotUnitary, or SchmidtNumberThree when the counted rank is 3. The
    class vector is left as None if extraction fails its self-check.
    """
    spectrum = schmidt_spectrum_svd(u)
    rank = schmidt_number(spectrum)
    if rank == 3:
        raise SchmidtNumberThree(spectrum)
    entanglement = linear_entropy(spectrum)
    problem = table1_violation(rank, entanglement)
    if problem is not None:
        raise InternalConsistencyError(problem)

    canonical = None
    if extract:
        from .kak import extract_class_vector
        try:
            canonical = extract_class_vector(u)
        except ExtractionFailed:
            canonical = None
    return OperatorAnalysis(spectrum, rank, entanglement, canonical)
