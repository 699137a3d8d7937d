"""Numerical tolerances shared by every module."""

#: Frobenius bound on ``U U^dagger - I`` for the unitarity precondition.
UNITARY_TOL = 1e-9
#: Accuracy target for eigenvalues / singular values, relative to the spectral norm.
EIG_TOL = 1e-10
#: Schmidt coefficients at or below ``RANK_TOL * s_1`` count as zero.
RANK_TOL = 1e-9
#: Jacobi iterations stop once the relative off-diagonal mass drops below this.
JACOBI_TOL = 1e-14
#: Hard cap on Jacobi sweeps. 4x4 problems converge quadratically in ~6 sweeps.
JACOBI_MAX_SWEEPS = 30
#: Hermitian precondition for the eigensolver.
HERMITIAN_TOL = 1e-9
#: Radicands in the closed-form Schmidt coefficients are clamped if above -this.
RADICAND_CLAMP = 1e-12
#: Slack used when testing Weyl-chamber membership of floating-point candidates.
CHAMBER_TOL = 1e-12
#: Self-check tolerance for class-vector extraction.
KAK_VERIFY_TOL = 1e-8
#: Unitarity tolerance applied to user-supplied matrix files.
FILE_UNITARY_TOL = 1e-6
#: Slack on the Schmidt-number / entanglement pairing checks.
TABLE_TOL = 1e-9
