import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from opentangle.canonical import (
    CanonicalParams,
    build_ud,
    closed_schmidt_number,
    entanglement_closed,
    entanglement_sch2_c3,
    in_weyl_chamber,
    reduce_to_weyl_chamber,
    schmidt_coefficients_closed,
    schmidt_radicands,
    schmidt_radicands_textbook,
)
from opentangle.kak import makhlin_invariants
from opentangle.matrix import I4, PAULI_X, PAULI_Y, PAULI_Z, SWAP, is_unitary

from conftest import pauli_schmidt_spectrum

PI = np.pi
R2 = np.sqrt(2)

angles = st.floats(min_value=-10, max_value=10, allow_nan=False)
triples = st.tuples(angles, angles, angles)


def ud_by_expm(c):
    h = sum(ci * np.kron(p, p) for ci, p in zip(c, (PAULI_X, PAULI_Y, PAULI_Z)))
    return expm(-1j * h)


class TestBuildUd:
    def test_identity(self):
        np.testing.assert_array_equal(build_ud((0, 0, 0)), I4)

    def test_swap_point(self):
        u = build_ud((PI / 4, PI / 4, PI / 4))
        np.testing.assert_allclose(np.abs(u), np.abs(SWAP), atol=1e-15)
        np.testing.assert_allclose(pauli_schmidt_spectrum(u), [1, 1, 1, 1], atol=1e-12)
        # SWAP up to the global phase e^{-i pi/4}
        np.testing.assert_allclose(u, np.exp(-1j * PI / 4) * SWAP, atol=1e-15)

    def test_cnot_class_point(self):
        u = build_ud((PI / 4, 0, 0))
        h = R2 / 2
        expected = np.array([
            [h, 0, 0, -1j * h],
            [0, h, -1j * h, 0],
            [0, -1j * h, h, 0],
            [-1j * h, 0, 0, h],
        ])
        np.testing.assert_allclose(u, expected, atol=1e-15)
        assert is_unitary(u, 1e-12)
        np.testing.assert_allclose(pauli_schmidt_spectrum(u), [R2, R2, 0, 0], atol=1e-12)

    def test_matches_exponential(self, rng):
        for _ in range(50):
            c = rng.uniform(-3, 3, size=3)
            np.testing.assert_allclose(build_ud(c), ud_by_expm(c), atol=1e-13)

    def test_stack(self, rng):
        cs = rng.uniform(-1, 1, size=(5, 3))
        stack = build_ud(cs)
        for c, u in zip(cs, stack):
            np.testing.assert_array_equal(u, build_ud(c))

    @given(triples)
    def test_unitary(self, c):
        assert is_unitary(build_ud(c), 1e-12)


class TestClosedSpectrum:
    @pytest.mark.parametrize("p, expected", [
        ((0, 0, 0), (2, 0, 0, 0)),
        ((PI / 4, 0, 0), (R2, R2, 0, 0)),
        ((PI / 4, PI / 4, 0), (1, 1, 1, 1)),
    ])
    def test_examples(self, p, expected):
        s = schmidt_coefficients_closed(p)
        assert isinstance(s, tuple) and len(s) == 4
        np.testing.assert_allclose(s, expected, atol=1e-12)
        np.testing.assert_allclose(s, pauli_schmidt_spectrum(build_ud(p)), atol=1e-12)

    @given(triples)
    def test_matches_textbook_form(self, c):
        np.testing.assert_allclose(schmidt_radicands(c), schmidt_radicands_textbook(c), atol=1e-12)

    @given(triples)
    def test_normalization(self, c):
        assert abs(np.sum(np.square(schmidt_coefficients_closed(c))) - 4) <= 1e-10

    @given(triples)
    def test_sorted_nonnegative(self, c):
        s = np.array(schmidt_coefficients_closed(c))
        assert np.all(s >= 0) and np.all(np.diff(s) <= 0)

    def test_against_pauli_oracle(self, rng):
        for _ in range(200):
            c = rng.uniform(-4, 4, size=3)
            np.testing.assert_allclose(
                schmidt_coefficients_closed(c), pauli_schmidt_spectrum(build_ud(c)), atol=1e-12
            )

    def test_zero_coefficients_are_clean(self):
        # the literal radicand leaves ~1e-16 here; its sqrt would read as a
        # nonzero coefficient at the 1e-9 rank tolerance
        s = schmidt_coefficients_closed((PI / 4, 0, 0))
        assert s.s3 < 1e-15 and s.s4 < 1e-15
        assert closed_schmidt_number((PI / 4, 0, 0)) == 2
        assert closed_schmidt_number((0, PI / 4, 0)) == 2


class TestEntanglementClosed:
    def test_identity(self):
        assert entanglement_closed((0, 0, 0)) == 0

    def test_swap_class_maximum(self):
        assert abs(entanglement_closed((PI / 4, PI / 4, 0)) - 0.75) <= 1e-15

    def test_cnot_class(self):
        # 1 - (1 - 1/4 - 1/4 + 3/4 + 3/4) / 4 = 1/2
        assert abs(entanglement_closed((PI / 4, 0, 0)) - 0.5) <= 1e-15

    @given(triples)
    def test_consistent_with_spectrum(self, c):
        s = np.array(schmidt_coefficients_closed(c))
        assert abs(1 - np.sum(s ** 4) / 16 - entanglement_closed(c)) <= 1e-10

    @given(st.floats(0, PI / 4), st.floats(0, 1), st.floats(-1, 1))
    def test_chamber_bounds(self, a, b, t):
        c = (a, a * b, a * b * t)
        assert in_weyl_chamber(c)
        assert -1e-15 <= entanglement_closed(c) <= 0.75 + 1e-12

    @given(angles)
    def test_c3_period(self, c3):
        c = np.array([0.37, 0.11, c3])
        assert abs(entanglement_closed(c) - entanglement_closed(c + [0, 0, PI / 2])) <= 1e-12

    def test_vectorized(self, rng):
        cs = rng.uniform(-1, 1, size=(10, 3))
        np.testing.assert_allclose(entanglement_closed(cs), [entanglement_closed(c) for c in cs], rtol=0, atol=0)


class TestSchmidtTwoFamily:
    @pytest.mark.parametrize("c3, expected", [(0, 0), (PI / 4, 0.5), (PI / 8, 0.25)])
    def test_examples(self, c3, expected):
        assert abs(entanglement_sch2_c3(c3) - expected) <= 1e-15
        assert abs(entanglement_closed((0, 0, c3)) - expected) <= 1e-15

    @given(angles)
    def test_matches_general_form(self, c3):
        assert abs(entanglement_closed((0, 0, c3)) - entanglement_sch2_c3(c3)) <= 1e-12


def brute_force_representatives(p, step=PI / 16):
    """Lattice points of the chamber with the same local invariants as U_d(p)."""
    target = makhlin_invariants(build_ud(p))
    grid = np.arange(-4, 5) * step
    hits = []
    for c in itertools.product(grid, repeat=3):
        if in_weyl_chamber(c, 1e-12):
            g1, g2 = makhlin_invariants(build_ud(c))
            if abs(g1 - target[0]) < 1e-9 and abs(g2 - target[1]) < 1e-9:
                hits.append(tuple(float(x) for x in c))
    return hits


class TestWeylReduction:
    def test_fixed_point(self):
        assert reduce_to_weyl_chamber((0, 0, 0)) == (0, 0, 0)

    def test_permuted_cnot_class(self):
        assert brute_force_representatives((0, 0, PI / 4)) == [(PI / 4, 0.0, 0.0)]
        q = reduce_to_weyl_chamber((0, 0, PI / 4))
        np.testing.assert_allclose(q, (PI / 4, 0, 0), atol=1e-15)

    def test_shift_and_reflect(self):
        q = reduce_to_weyl_chamber((PI / 3, 0, 0))
        np.testing.assert_allclose(q, (PI / 6, 0, 0), atol=1e-15)
        np.testing.assert_allclose(
            schmidt_coefficients_closed(q), schmidt_coefficients_closed((PI / 3, 0, 0)), atol=1e-12
        )

    @pytest.mark.parametrize("p", [
        (PI / 2, PI / 4, -PI / 8),
        (-PI / 4, PI / 8, PI / 16),
        (3 * PI / 4, 0, PI / 4),
        (PI / 8, -3 * PI / 16, PI),
    ])
    def test_lattice_points_match_brute_force(self, p):
        hits = brute_force_representatives(p)
        q = reduce_to_weyl_chamber(p)
        assert any(np.allclose(q, h, atol=1e-12) for h in hits)

    def test_swap_face_prefers_nonnegative_c3(self):
        q = reduce_to_weyl_chamber((PI / 4, 0.3, -0.1))
        np.testing.assert_allclose(q, (PI / 4, 0.3, 0.1), atol=1e-12)

    def test_mirror_class_kept_apart(self):
        q = reduce_to_weyl_chamber((0.5, 0.3, -0.1))
        assert q == CanonicalParams(0.5, 0.3, -0.1)

    @given(triples)
    @settings(max_examples=300)
    def test_invariants(self, c):
        q = reduce_to_weyl_chamber(c)
        assert PI / 4 >= q.c1 >= q.c2 >= abs(q.c3)
        assert reduce_to_weyl_chamber(q) == q
        np.testing.assert_allclose(
            schmidt_coefficients_closed(q), schmidt_coefficients_closed(c), atol=1e-10
        )
        g_in, g_out = makhlin_invariants(build_ud(c)), makhlin_invariants(build_ud(q))
        assert abs(g_in[0] - g_out[0]) < 1e-9 and abs(g_in[1] - g_out[1]) < 1e-9

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            reduce_to_weyl_chamber((np.inf, 0, 0))
