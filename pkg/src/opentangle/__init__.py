"""Operator entanglement of two-qubit unitaries.

Operator-Schmidt spectra, Schmidt numbers and linear-entropy entanglement of
4x4 unitaries, the canonical class vector (c1, c2, c3) and its closed forms,
and the XX gate generated by a dispersive two-atom cavity coupling.
"""
__version__ = "0.1.0"

from .canonical import (
    CanonicalParams,
    SchmidtSpectrum,
    build_ud,
    entanglement_closed,
    entanglement_sch2_c3,
    in_weyl_chamber,
    reduce_to_weyl_chamber,
    schmidt_coefficients_closed,
)
from .errors import (
    ExtractionFailed,
    InternalConsistencyError,
    NotHermitian,
    NotReducible,
    NotUnitary,
    OpentangleError,
    SchmidtNumberThree,
)
from .kak import extract_class_vector, global_phase_normalize, makhlin_invariants
from .matrix import (
    CNOT,
    I4,
    SWAP,
    adjoint,
    haar_random_unitary2,
    haar_random_unitary4,
    hermitian_eigenvalues,
    is_unitary,
    kron,
    multiply,
)
from .schmidt import (
    OperatorAnalysis,
    analyze,
    linear_entropy,
    reshuffle,
    schmidt_number,
    schmidt_spectrum_svd,
)
