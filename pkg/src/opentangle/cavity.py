"""Two detuned atoms in a driven single-mode cavity.

Under large detuning and strong driving the atoms couple through the effective
Hamiltonian H = (lambda / 2) sigma_x (x) sigma_x with lambda = g^2 / delta1,
which generates an XX rotation whose canonical class vector is (lambda t / 2, 0, 0).
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .canonical import build_ud
from .errors import InternalConsistencyError
from .matrix import I4, PAULI_X, kron
from .schmidt import analyze

XX = kron(PAULI_X, PAULI_X)

#: Ratio used to call one scale "much greater" than another in the regime flags.
REGIME_RATIO = 10.0


@dataclass(frozen=True)
class EffectiveCoupling:
    """Atom-cavity parameters in angular-frequency units.

    The regime flags are advisory: the effective model is valid when
    |delta1| >> g and omega >> g^2 / |delta1|, but nothing is enforced.
    """

    g: float
    delta1: float
    omega: Optional[float] = None

    def __post_init__(self):
        if self.delta1 == 0:
            raise ValueError("delta1 must be nonzero")

    @property
    def coupling(self):
        return self.g ** 2 / self.delta1

    @property
    def large_detuning(self):
        return abs(self.delta1) >= REGIME_RATIO * abs(self.g)

    @property
    def strong_driving(self):
        if self.omega is None:
            return None
        return abs(self.omega) >= REGIME_RATIO * abs(self.coupling)

    def phase(self, t):
        """Accumulated interaction phase lambda * t."""
        return self.coupling * t


@dataclass(frozen=True)
class EvolutionPoint:
    phase: float
    entanglement: float
    schmidt_number: int


def effective_hamiltonian(coupling):
    return 0.5 * coupling * XX


def u_eff(phase):
    """Evolution operator after interaction phase ``phase`` = lambda t."""
    c = np.cos(phase / 2)
    s = np.sin(phase / 2)
    u = np.zeros((4, 4), dtype=complex)
    u[0, 0] = u[1, 1] = u[2, 2] = u[3, 3] = c
    u[0, 3] = u[1, 2] = u[2, 1] = u[3, 0] = -1j * s
    return u


def xx_exponential(phase):
    """exp(-i (phase / 2) XX) via the two-term identity valid because XX^2 = I."""
    theta = phase / 2
    return np.cos(theta) * I4 - 1j * np.sin(theta) * XX


def verify_hamiltonian_exponential(phase, tol=1e-10):
    return bool(np.max(np.abs(xx_exponential(phase) - u_eff(phase))) <= tol)


def entanglement_xx(phase):
    """Closed form sin^2(lambda t) / 2."""
    e = 0.5 * np.sin(np.asarray(phase, dtype=float)) ** 2
    return float(e) if np.ndim(e) == 0 else e


def entanglement_trajectory(phase_max, steps, tol=1e-9):
    """Entanglement of u_eff on a uniform grid over [0, phase_max].

    Each point is evaluated twice, by the closed form and by the
    operator-Schmidt route on the explicit matrix; a disagreement above
    ``tol`` raises InternalConsistencyError.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    points = []
    for phase in np.linspace(0.0, phase_max, steps):
        closed = entanglement_xx(phase)
        result = analyze(u_eff(phase), extract=False)
        if abs(result.entanglement - closed) > tol:
            raise InternalConsistencyError(
                f"E(lambda t={phase!r}): closed form {closed!r} vs SVD {result.entanglement!r}"
            )
        points.append(EvolutionPoint(float(phase), closed, result.schmidt_number))
    return points


def matches_canonical_form(phase, tol=1e-12):
    """u_eff(phase) equals U_d(phase / 2, 0, 0) entrywise."""
    return bool(np.max(np.abs(u_eff(phase) - build_ud((phase / 2, 0.0, 0.0)))) <= tol)
