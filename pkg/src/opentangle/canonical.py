"""Closed forms in the canonical parameters (c1, c2, c3).

The nonlocal core of a two-qubit gate is

    U_d = exp[-i (c1 XX + c2 YY + c3 ZZ)]

which in the computational basis has the block structure

    [[e^{-ic3} c-,        0,              0,        -i e^{-ic3} s-],
     [0,             e^{ic3} c+,   -i e^{ic3} s+,         0       ],
     [0,            -i e^{ic3} s+,   e^{ic3} c+,          0       ],
     [-i e^{-ic3} s-,     0,              0,         e^{-ic3} c-  ]]

with c+- = cos(c1 +- c2), s+- = sin(c1 +- c2).
"""
import itertools
from typing import NamedTuple

import numpy as np

from .errors import NotReducible
from .tolerances import CHAMBER_TOL, RADICAND_CLAMP, RANK_TOL

QUARTER_PI = np.pi / 4
HALF_PI = np.pi / 2


class CanonicalParams(NamedTuple):
    """Class vector in radians."""

    c1: float
    c2: float
    c3: float

    def in_chamber(self, tol=0.0):
        return in_weyl_chamber(self, tol)


class SchmidtSpectrum(NamedTuple):
    """Operator-Schmidt coefficients, sorted descending."""

    s1: float
    s2: float
    s3: float
    s4: float

    @classmethod
    def from_values(cls, values):
        v = np.sort(np.asarray(values, dtype=float).reshape(4))[::-1]
        return cls(*(float(x) for x in v))


def _as_params(p):
    c = np.asarray(p, dtype=float)
    if c.shape[-1:] != (3,):
        raise ValueError(f"expected (c1, c2, c3), got shape {c.shape}")
    return c


def in_weyl_chamber(p, tol=0.0):
    """True iff pi/4 >= c1 >= c2 >= |c3| (each inequality relaxed by ``tol``)."""
    c1, c2, c3 = _as_params(p)
    return bool(
        c1 <= QUARTER_PI + tol and c1 >= c2 - tol and c2 >= abs(c3) - tol
    )


def build_ud(p):
    """The 4x4 unitary U_d(c1, c2, c3). ``p`` may be a stack of shape (..., 3)."""
    c = _as_params(p)
    c1, c2, c3 = c[..., 0], c[..., 1], c[..., 2]
    cm, cp = np.cos(c1 - c2), np.cos(c1 + c2)
    sm, sp = np.sin(c1 - c2), np.sin(c1 + c2)
    em, ep = np.exp(-1j * c3), np.exp(1j * c3)
    u = np.zeros(c.shape[:-1] + (4, 4), dtype=complex)
    u[..., 0, 0] = u[..., 3, 3] = em * cm
    u[..., 0, 3] = u[..., 3, 0] = -1j * em * sm
    u[..., 1, 1] = u[..., 2, 2] = ep * cp
    u[..., 1, 2] = u[..., 2, 1] = -1j * ep * sp
    return u


def schmidt_radicands(p):
    """Squares s_l^2 of the four closed-form Schmidt coefficients, unsorted.

    Order is (s1, s2, s3, s4) as in the textbook closed form

        s1^2 = cos^2(a) + cos^2(b) + 2 cos(2 c3) cos(a) cos(b)
        s2^2 = sin^2(a) + sin^2(b) + 2 cos(2 c3) sin(a) sin(b)
        s3^2 = sin^2(a) + sin^2(b) - 2 cos(2 c3) sin(a) sin(b)
        s4^2 = cos^2(a) + cos^2(b) - 2 cos(2 c3) cos(a) cos(b)

    with a = c1 + c2, b = c1 - c2, but each is evaluated in the equivalent
    sum-of-squares form 4 |alpha_k|^2, where alpha_k is the coefficient of
    sigma_k (x) sigma_k in U_d. The two agree exactly in real arithmetic; the
    sum-of-squares form has no cancellation, so zero coefficients stay at
    ~1e-32 instead of ~1e-16 (whose square root would be ~1e-8 and defeat
    rank counting).
    """
    c = _as_params(p)
    cs, sn = np.cos(c), np.sin(c)
    C1, C2, C3 = cs[..., 0], cs[..., 1], cs[..., 2]
    S1, S2, S3 = sn[..., 0], sn[..., 1], sn[..., 2]
    r = np.stack([
        (C1 * C2 * C3) ** 2 + (S1 * S2 * S3) ** 2,
        (S1 * C2 * C3) ** 2 + (C1 * S2 * S3) ** 2,
        (C1 * S2 * C3) ** 2 + (S1 * C2 * S3) ** 2,
        (S1 * S2 * C3) ** 2 + (C1 * C2 * S3) ** 2,
    ], axis=-1)
    return 4.0 * r


def schmidt_radicands_textbook(p):
    """Same four radicands evaluated literally (cancellation-prone near zero)."""
    c = _as_params(p)
    a = c[..., 0] + c[..., 1]
    b = c[..., 0] - c[..., 1]
    k = np.cos(2 * c[..., 2])
    ca, cb, sa, sb = np.cos(a), np.cos(b), np.sin(a), np.sin(b)
    return np.stack([
        ca ** 2 + cb ** 2 + 2 * k * ca * cb,
        sa ** 2 + sb ** 2 + 2 * k * sa * sb,
        sa ** 2 + sb ** 2 - 2 * k * sa * sb,
        ca ** 2 + cb ** 2 - 2 * k * ca * cb,
    ], axis=-1)


def _sqrt_clamped(r):
    r = np.where((r < 0) & (r > -RADICAND_CLAMP), 0.0, r)
    if np.any(r < 0):
        raise ValueError(f"negative Schmidt radicand {r.min():.3e}")
    return np.sqrt(r)


def schmidt_coefficients_array(params):
    """Closed-form spectra for a stack of parameter triples, shape (..., 4), descending."""
    s = _sqrt_clamped(schmidt_radicands(params))
    return np.sort(s, axis=-1)[..., ::-1]


def schmidt_coefficients_closed(p):
    return SchmidtSpectrum.from_values(schmidt_coefficients_array(p))


def entanglement_closed(p):
    """Linear-entropy operator entanglement of U_d in closed form.

    E = 1 - (1/4){1 - sin^2(a)cos^2(a) - sin^2(b)cos^2(b)
                  + [1 + 2cos^2(2c3)] (sin^2(a) sin^2(b) + cos^2(a) cos^2(b))}

    with a = c1 + c2, b = c1 - c2. Vectorized over a trailing axis of size 3.
    """
    c = _as_params(p)
    a = c[..., 0] + c[..., 1]
    b = c[..., 0] - c[..., 1]
    w = 1.0 + 2.0 * np.cos(2 * c[..., 2]) ** 2
    sa2, ca2 = np.sin(a) ** 2, np.cos(a) ** 2
    sb2, cb2 = np.sin(b) ** 2, np.cos(b) ** 2
    brace = 1.0 - sa2 * ca2 - sb2 * cb2 + w * sa2 * sb2 + w * ca2 * cb2
    e = 1.0 - 0.25 * brace
    return float(e) if np.ndim(e) == 0 else e


def entanglement_sch2_c3(c3):
    """E(U_d) on the (0, 0, c3) family: sin^2(2 c3) / 2."""
    e = 0.5 * np.sin(2 * np.asarray(c3, dtype=float)) ** 2
    return float(e) if np.ndim(e) == 0 else e


def closed_schmidt_number(p):
    """Schmidt number from the closed-form spectrum, same RANK_TOL policy as the SVD route."""
    s = schmidt_coefficients_array(p)
    return np.sum(s > RANK_TOL * s[..., :1], axis=-1)


_PERMUTATIONS = [list(perm) for perm in itertools.permutations(range(3))]
# negating any pair of components is a local equivalence; a single sign flip is not
_EVEN_SIGNS = np.array([(1, 1, 1), (-1, -1, 1), (-1, 1, -1), (1, -1, -1)], dtype=float)
_SHIFTS = HALF_PI * np.array(list(itertools.product((-1, 0, 1), repeat=3)), dtype=float)


def _orbit(c):
    """Images of ``c`` under permutations x even sign flips x pi/2 shifts (648 points)."""
    out = []
    for perm in _PERMUTATIONS:
        for sign in _EVEN_SIGNS:
            out.append(sign * c[perm] + _SHIFTS)
    return np.concatenate(out)


def _chamber_mask(cand, t):
    return (
        (cand[:, 0] <= QUARTER_PI + t)
        & (cand[:, 0] >= cand[:, 1] - t)
        & (cand[:, 1] >= np.abs(cand[:, 2]) - t)
    )


def reduce_to_weyl_chamber(p):
    """Locally-equivalent representative with pi/4 >= c1 >= c2 >= |c3|.

    Symmetries used: shifting any component by pi/2, negating any two
    components, and permuting components. Components outside [-pi/4, pi/4]
    are first folded into [-pi/4, pi/4); the finite orbit of the folded
    vector is then searched exhaustively for chamber members. On the c1 = pi/4 face, where
    (pi/4, c2, c3) and (pi/4, c2, -c3) are equivalent, c3 >= 0 is returned.
    The result satisfies the chamber inequalities exactly.
    """
    c = _as_params(p)
    if c.shape != (3,) or not np.all(np.isfinite(c)):
        raise ValueError(f"expected three finite angles, got {p!r}")
    folded = np.where(
        np.abs(c) <= QUARTER_PI, c, np.mod(c + QUARTER_PI, HALF_PI) - QUARTER_PI
    )
    cand = _orbit(folded)
    members = cand[_chamber_mask(cand, 0.0)]
    if len(members) == 0:
        members = cand[_chamber_mask(cand, CHAMBER_TOL)]
    if len(members) == 0:
        raise NotReducible(f"no Weyl-chamber representative found for {tuple(c)}")
    # lexicographic max: on the c1 = pi/4 face this picks c3 >= 0
    order = np.lexsort((members[:, 2], members[:, 1], members[:, 0]))
    c1, c2, c3 = members[order[-1]]
    c1 = min(max(c1, 0.0), QUARTER_PI)
    c2 = min(max(c2, 0.0), c1)
    c3 = min(max(c3, -c2), c2)
    return CanonicalParams(float(c1) + 0.0, float(c2) + 0.0, float(c3) + 0.0)
