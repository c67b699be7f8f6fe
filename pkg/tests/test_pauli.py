import numpy as np
import pytest
from pytest import approx

from conftest import kron_matrix, random_pauli_sum, random_state
from paravqe.pauli import PauliSum, PauliTerm
from paravqe.state import (DimensionError, HermiticityError,
                           NormalizationError, StateVector,
                           apply_pauli_string, expectation)


class TestPauliTerm:
    def test_rejects_bad_characters(self):
        with pytest.raises(ValueError):
            PauliTerm(1.0, "XQ")

    def test_rejects_non_finite_coeff(self):
        with pytest.raises(ValueError):
            PauliTerm(float("nan"), "XX")

    def test_weight_counts_support(self):
        assert PauliTerm(1.0, "IXZY").weight == 3


class TestApplyPauliString:
    def test_x_flips_qubit0(self):
        out = apply_pauli_string(PauliTerm(1.0, "X"), StateVector.basis_state(1, 0))
        assert out.amplitudes[1] == approx(1.0)
        assert out.amplitudes[0] == approx(0.0)

    def test_y_gives_i_phase(self):
        out = apply_pauli_string(PauliTerm(1.0, "Y"), StateVector.basis_state(1, 0))
        assert out.amplitudes[1] == approx(1j)

    def test_zz_sign_on_single_occupation(self):
        st = StateVector.basis_state(2, 1)
        out = apply_pauli_string(PauliTerm(1.0, "ZZ"), st)
        assert out.amplitudes[1] == approx(-1.0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            apply_pauli_string(PauliTerm(1.0, "XX"), StateVector.basis_state(3, 0))

    def test_input_not_modified(self):
        st = StateVector.basis_state(2, 0)
        before = st.amplitudes.copy()
        apply_pauli_string(PauliTerm(1.0, "XY"), st)
        assert np.array_equal(st.amplitudes, before)

    def test_norm_preserved_for_unit_coeff(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            st = StateVector(3, random_state(rng, 3))
            out = apply_pauli_string(PauliTerm(-1.0, "YZX"), st)
            assert out.norm() == approx(1.0, abs=1e-12)

    def test_involution(self):
        rng = np.random.default_rng(4)
        st = StateVector(4, random_state(rng, 4))
        term = PauliTerm(1.0, "XYZI")
        twice = apply_pauli_string(term, apply_pauli_string(term, st))
        np.testing.assert_allclose(twice.amplitudes, st.amplitudes, atol=1e-14)

    def test_matches_dense_matrix(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = int(rng.integers(1, 5))
            paulis = "".join(rng.choice(list("IXYZ"), size=n))
            coeff = float(rng.normal())
            st = StateVector(n, random_state(rng, n))
            out = apply_pauli_string(PauliTerm(coeff, paulis), st)
            mat = kron_matrix(PauliSum(n, 0.0, [PauliTerm(coeff, paulis)]))
            np.testing.assert_allclose(out.amplitudes, mat @ st.amplitudes,
                                       atol=1e-12)


class TestPauliSum:
    def test_merges_duplicates_and_drops_tiny(self):
        H = PauliSum(2, 0.0, [PauliTerm(0.5, "XZ"), PauliTerm(0.25, "XZ"),
                              PauliTerm(1e-13, "ZZ")])
        assert len(H) == 1
        assert H.terms[0].coeff == approx(0.75)

    def test_cancellation_removes_term(self):
        H = PauliSum(1, 0.0, [PauliTerm(0.5, "X"), PauliTerm(-0.5, "X")])
        assert len(H) == 0

    def test_identity_terms_fold_into_constant(self):
        H = PauliSum(2, 1.0, [PauliTerm(0.5, "II")])
        assert H.constant == approx(1.5)
        assert len(H) == 0

    def test_length_validation(self):
        with pytest.raises(ValueError):
            PauliSum(3, 0.0, [PauliTerm(1.0, "XX")])


class TestExpectation:
    def test_constant_only(self):
        rng = np.random.default_rng(6)
        H = PauliSum(3, -2.5)
        st = StateVector(3, random_state(rng, 3))
        assert expectation(H, st) == approx(-2.5, abs=1e-12)

    def test_minus_z_eigenstate(self):
        H = PauliSum(1, 0.0, [PauliTerm(-1.0, "Z")])
        assert expectation(H, StateVector.basis_state(1, 1)) == approx(1.0)

    def test_h2_fixture_hartree_fock(self, h2, h2_file):
        from paravqe.state import hartree_fock_state
        hf = hartree_fock_state(h2.n_qubits, h2_file.n_electrons)
        assert expectation(h2, hf) == approx(h2_file.hf_energy, abs=1e-10)

    def test_rejects_unnormalized(self):
        st = StateVector(1, np.array([1.0, 1.0], dtype=complex))
        with pytest.raises(NormalizationError):
            expectation(PauliSum(1, 0.0), st)

    def test_imaginary_residue_guard(self):
        # corrupt the compiled prefactors to emulate a non-Hermitian operator
        H = PauliSum(1, 0.0, [PauliTerm(1.0, "Z")])
        flips, phases, prefs = H.compiled_actions()
        prefs += 1j
        H._kernel_cache = (None,)   # force the term-by-term path
        with pytest.raises(HermiticityError):
            expectation(H, StateVector.basis_state(1, 0))

    def test_oracle_equivalence_random(self):
        rng = np.random.default_rng(7)
        for _ in range(15):
            n = int(rng.integers(2, 7))
            H = random_pauli_sum(rng, n, int(rng.integers(1, 12)))
            amp = random_state(rng, n)
            direct = expectation(H, StateVector(n, amp))
            dense = (amp.conj() @ kron_matrix(H) @ amp).real
            assert direct == approx(dense, abs=1e-10)
