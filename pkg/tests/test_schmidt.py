import numpy as np
import pytest

from opentangle import schmidt
from opentangle.canonical import SchmidtSpectrum, build_ud, entanglement_closed, schmidt_coefficients_closed
from opentangle.errors import InternalConsistencyError, NotUnitary, SchmidtNumberThree
from opentangle.matrix import (
    CNOT,
    I4,
    SWAP,
    adjoint,
    haar_random_unitaries,
    hermitian_eigenvalues,
    kron,
)
from opentangle.schmidt import (
    analyze,
    linear_entropy,
    reshuffle,
    schmidt_number,
    schmidt_numbers,
    schmidt_spectra,
    schmidt_spectrum_svd,
    table1_violation,
)

from conftest import pauli_schmidt_spectrum, random_chamber_point

R2 = np.sqrt(2)
PI = np.pi


class TestReshuffle:
    def test_involution(self, rng):
        m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        np.testing.assert_array_equal(reshuffle(reshuffle(m)), m)

    def test_index_map(self, rng):
        u = rng.normal(size=(4, 4))
        r = reshuffle(u)
        for i, j, k, l in np.ndindex(2, 2, 2, 2):
            assert r[2 * i + j, 2 * k + l] == u[2 * i + k, 2 * j + l]

    def test_product_operator_is_rank_one(self):
        a, b = haar_random_unitaries(2, 2, 9)
        r = reshuffle(kron(a, b))
        np.testing.assert_allclose(r, np.outer(a.ravel(), b.ravel()), atol=1e-15)
        sv = np.linalg.svd(r, compute_uv=False)
        assert sv[1] < 1e-14

    def test_identity(self):
        np.testing.assert_allclose(np.linalg.svd(reshuffle(I4), compute_uv=False), [2, 0, 0, 0], atol=1e-15)

    def test_stack(self, rng):
        us = rng.normal(size=(3, 4, 4))
        for u, r in zip(us, reshuffle(us)):
            np.testing.assert_array_equal(r, reshuffle(u))


class TestSpectrum:
    @pytest.mark.parametrize("u, expected", [
        (I4, (2, 0, 0, 0)),
        (CNOT, (R2, R2, 0, 0)),
        (SWAP, (1, 1, 1, 1)),
    ], ids=["I4", "CNOT", "SWAP"])
    def test_examples(self, u, expected):
        s = schmidt_spectrum_svd(u)
        np.testing.assert_allclose(s, expected, atol=1e-12)
        np.testing.assert_allclose(s, pauli_schmidt_spectrum(u), atol=1e-12)

    def test_cnot_matches_closed_form_class(self):
        np.testing.assert_allclose(
            schmidt_spectrum_svd(CNOT), schmidt_coefficients_closed((PI / 4, 0, 0)), atol=1e-12
        )

    def test_matches_eigen_route(self):
        # sqrt of the Jacobi eigenvalues of R R^dag: loses accuracy near zero, so 1e-7
        for u in haar_random_unitaries(200, 4, 17):
            r = reshuffle(u)
            ev = np.sqrt(np.clip(hermitian_eigenvalues(r @ adjoint(r)), 0, None))
            np.testing.assert_allclose(schmidt_spectrum_svd(u), ev, atol=1e-7)

    def test_normalization(self):
        s = schmidt_spectra(haar_random_unitaries(1000, 4, 5))
        assert np.max(np.abs(np.sum(s ** 2, axis=1) - 4)) <= 1e-9

    def test_not_unitary(self):
        with pytest.raises(NotUnitary) as info:
            schmidt_spectrum_svd(2 * I4)
        assert info.value.defect == pytest.approx(6.0)

    def test_closed_form_oracle(self, rng):
        ps = np.array([random_chamber_point(rng) for _ in range(500)])
        np.testing.assert_allclose(
            schmidt_spectra(build_ud(ps)),
            [schmidt_coefficients_closed(p) for p in ps],
            atol=1e-9,
        )

    def test_local_invariance(self, rng):
        for trial in range(100):
            a, b, c, d = haar_random_unitaries(4, 2, 1000 + trial)
            p = random_chamber_point(rng)
            u = kron(a, b) @ build_ud(p) @ kron(c, d)
            np.testing.assert_allclose(schmidt_spectrum_svd(u), schmidt_spectrum_svd(build_ud(p)), atol=1e-9)


class TestCounting:
    @pytest.mark.parametrize("s, n", [
        ((2, 0, 0, 0), 1),
        ((R2, R2, 0, 0), 2),
        ((1, 1, 1, 1), 4),
        ((2, 1e-10, 0, 0), 1),
        ((1, 1, 1, 1e-6), 4),
    ])
    def test_schmidt_number(self, s, n):
        assert schmidt_number(SchmidtSpectrum(*s)) == n

    @pytest.mark.parametrize("s, e", [
        ((2, 0, 0, 0), 0.0),
        ((R2, R2, 0, 0), 0.5),
        ((1, 1, 1, 1), 0.75),
    ])
    def test_linear_entropy(self, s, e):
        assert linear_entropy(SchmidtSpectrum(*s)) == pytest.approx(e, abs=1e-15)

    def test_entropy_bound(self):
        s = schmidt_spectra(haar_random_unitaries(5000, 4, 3))
        e = linear_entropy(s)
        assert np.all(e <= 0.75 + 1e-12)
        near_max = np.abs(e - 0.75) <= 1e-9
        assert np.all(np.max(np.abs(s[near_max] - 1), axis=-1) <= 1e-6)

    def test_haar_ranks(self):
        ranks = schmidt_numbers(schmidt_spectra(haar_random_unitaries(5000, 4, 4)))
        assert set(np.unique(ranks)) <= {1, 2, 4}

    @pytest.mark.parametrize("rank, e, ok", [
        (1, 0.0, True), (1, 1e-3, False),
        (2, 0.5, True), (2, 0.0, False), (2, 0.51, False),
        (4, 0.75, True), (4, 0.76, False),
        (3, 0.3, False),
    ])
    def test_table1_violation(self, rank, e, ok):
        assert (table1_violation(rank, e) is None) == ok


class TestAnalyze:
    def test_identity(self):
        r = analyze(I4)
        np.testing.assert_allclose(r.spectrum, (2, 0, 0, 0), atol=1e-15)
        assert r.schmidt_number == 1
        assert abs(r.entanglement) <= 1e-15
        assert r.canonical == (0, 0, 0)

    def test_cnot(self):
        r = analyze(CNOT)
        np.testing.assert_allclose(r.spectrum, (R2, R2, 0, 0), atol=1e-12)
        assert r.schmidt_number == 2
        assert r.entanglement == pytest.approx(0.5, abs=1e-12)
        np.testing.assert_allclose(r.canonical, (PI / 4, 0, 0), atol=1e-12)

    def test_generic_canonical_point(self):
        r = analyze(build_ud((0.5, 0.3, 0.1)))
        assert r.schmidt_number == 4
        assert abs(r.entanglement - entanglement_closed((0.5, 0.3, 0.1))) <= 1e-9
        np.testing.assert_allclose(r.canonical, (0.5, 0.3, 0.1), atol=1e-9)

    def test_not_unitary(self):
        with pytest.raises(NotUnitary):
            analyze(np.ones((4, 4)))

    def test_rank_three_is_reported(self, monkeypatch):
        fake = SchmidtSpectrum(1.2, 1.1, 1.0, 1e-12)
        monkeypatch.setattr(schmidt, "schmidt_spectrum_svd", lambda u: fake)
        with pytest.raises(SchmidtNumberThree) as info:
            analyze(I4)
        assert info.value.spectrum == fake

    def test_bound_violation_is_internal_error(self, monkeypatch):
        monkeypatch.setattr(schmidt, "schmidt_spectrum_svd", lambda u: SchmidtSpectrum(1.9, 0.5, 0, 0))
        monkeypatch.setattr(schmidt, "linear_entropy", lambda s: 0.6)
        with pytest.raises(InternalConsistencyError):
            analyze(I4)

    def test_as_dict(self):
        d = analyze(SWAP).as_dict()
        assert set(d) == {"spectrum", "schmidt_number", "entanglement", "canonical"}
        assert d["schmidt_number"] == 4
