"""Exceptions raised by opentangle."""


class OpentangleError(Exception):
    """Base class for all errors raised by this package."""


class NotUnitary(OpentangleError, ValueError):
    """Input matrix fails the unitarity check.

    ``defect`` holds the Frobenius norm of ``U U^dagger - I``.
    """

    def __init__(self, defect, tol):
        self.defect = float(defect)
        self.tol = float(tol)
        super().__init__(
            f"matrix is not unitary: ||U U^dag - I||_F = {self.defect:.3e} > {self.tol:.1e}"
        )


class NotHermitian(OpentangleError, ValueError):
    def __init__(self, defect, tol):
        self.defect = float(defect)
        super().__init__(f"matrix is not Hermitian: ||M - M^dag||_F = {defect:.3e} > {tol:.1e}")


class SchmidtNumberThree(OpentangleError):
    """Tolerance-counted operator-Schmidt rank came out as 3.

    Two-qubit unitaries only have Schmidt number 1, 2 or 4, so this means the
    input is numerically borderline (or something is broken). The raw spectrum
    is attached rather than rounded to a neighbouring rank.
    """

    def __init__(self, spectrum):
        self.spectrum = spectrum
        super().__init__(f"Schmidt rank 3 is impossible for a unitary; raw spectrum {tuple(spectrum)}")


class NotReducible(OpentangleError, RuntimeError):
    """No Weyl-chamber representative found in the symmetry orbit (a bug)."""


class ExtractionFailed(OpentangleError, RuntimeError):
    """Class-vector extraction failed its self-check for every branch choice."""


class InternalConsistencyError(OpentangleError, RuntimeError):
    """Two independent routes to the same quantity disagree."""
