import numpy as np
import pytest
from pytest import approx
from scipy.linalg import expm

from conftest import kron_matrix, random_state
from paravqe.pauli import PauliSum, PauliTerm
from paravqe.pools import build_pool
from paravqe.state import (ExperimentCounter, StateVector,
                           apply_double_qubit_excitation, apply_excitation,
                           apply_pauli_string, apply_single_qubit_excitation,
                           apply_string_exponential, counted_expectation,
                           hartree_fock_state)


class TestHartreeFock:
    def test_two_electrons_on_four_qubits(self):
        st = hartree_fock_state(4, 2)
        assert st.amplitudes[3] == approx(1.0)
        assert st.norm() == approx(1.0)

    def test_vacuum(self):
        st = hartree_fock_state(5, 0)
        assert st.amplitudes[0] == approx(1.0)

    def test_twelve_qubits_four_electrons(self):
        st = hartree_fock_state(12, 4)
        assert st.amplitudes[15] == approx(1.0)

    def test_too_many_electrons(self):
        with pytest.raises(ValueError):
            hartree_fock_state(3, 4)


def _single_generator_matrix(n, i, k, theta):
    chain = {}
    xy = {i: "X", k: "Y", **chain}
    yx = {i: "Y", k: "X", **chain}

    def s(placed):
        chars = ["I"] * n
        for q, c in placed.items():
            chars[q] = c
        return "".join(chars)

    g = 0.5 * (kron_matrix(PauliSum(n, 0, [PauliTerm(1.0, s(xy))]))
               - kron_matrix(PauliSum(n, 0, [PauliTerm(1.0, s(yx))])))
    return expm(1j * theta * g)


class TestSingleQubitExcitation:
    def test_theta_zero_is_identity(self):
        rng = np.random.default_rng(0)
        st = StateVector(3, random_state(rng, 3))
        out = apply_single_qubit_excitation(st, 0, 2, 0.0)
        np.testing.assert_allclose(out.amplitudes, st.amplitudes, atol=1e-15)

    def test_half_pi_maps_pair_states(self):
        # local |01> (q_k set) -> |10> (q_i set), read from the matrix columns
        st = StateVector.basis_state(2, 0b10)   # q_k=1 for (i,k)=(0,1)
        out = apply_single_qubit_excitation(st, 0, 1, np.pi / 2)
        assert out.amplitudes[0b01] == approx(1.0, abs=1e-15)

    def test_fixed_states_untouched(self):
        st = StateVector.basis_state(2, 0b11)
        out = apply_single_qubit_excitation(st, 0, 1, 0.37)
        assert out.amplitudes[0b11] == approx(1.0)

    def test_matches_string_exponential(self):
        rng = np.random.default_rng(1)
        for _ in range(5):
            theta = rng.uniform(-np.pi, np.pi)
            st = StateVector(4, random_state(rng, 4))
            out = apply_single_qubit_excitation(st, 1, 3, theta)
            ref = _single_generator_matrix(4, 1, 3, theta) @ st.amplitudes
            np.testing.assert_allclose(out.amplitudes, ref, atol=1e-12)

    def test_index_validation(self):
        st = StateVector.basis_state(2, 0)
        with pytest.raises(ValueError):
            apply_single_qubit_excitation(st, 1, 1, 0.1)
        with pytest.raises(ValueError):
            apply_single_qubit_excitation(st, 0, 2, 0.1)


class TestDoubleQubitExcitation:
    def test_theta_zero_is_identity(self):
        rng = np.random.default_rng(2)
        st = StateVector(4, random_state(rng, 4))
        out = apply_double_qubit_excitation(st, 0, 1, 2, 3, 0.0)
        np.testing.assert_allclose(out.amplitudes, st.amplitudes, atol=1e-15)

    def test_half_pi_swaps_pair_states(self):
        # local 3 (q_i=q_j=1) -> local 12; local 12 -> -(local 3)
        st = StateVector.basis_state(4, 0b0011)
        out = apply_double_qubit_excitation(st, 0, 1, 2, 3, np.pi / 2)
        assert out.amplitudes[0b1100] == approx(1.0, abs=1e-15)
        st = StateVector.basis_state(4, 0b1100)
        out = apply_double_qubit_excitation(st, 0, 1, 2, 3, np.pi / 2)
        assert out.amplitudes[0b0011] == approx(-1.0, abs=1e-15)

    def test_matches_commuting_exponential_product(self):
        rng = np.random.default_rng(3)
        pool = build_pool("qubit-excitation", 4, 2)
        double = [e for e in pool if e.kind == "qe-double"][0]
        for _ in range(5):
            theta = rng.uniform(-np.pi, np.pi)
            st = StateVector(4, random_state(rng, 4))
            direct = apply_double_qubit_excitation(st, *double.indices, theta)
            via = st
            for term in double.generator_terms:
                via = apply_string_exponential(
                    via, theta * abs(term.coeff),
                    PauliTerm(np.sign(term.coeff), term.paulis))
            np.testing.assert_allclose(direct.amplitudes, via.amplitudes,
                                       atol=1e-12)

    def test_repeated_indices_rejected(self):
        st = StateVector.basis_state(4, 0)
        with pytest.raises(ValueError):
            apply_double_qubit_excitation(st, 0, 1, 1, 3, 0.1)


class TestStringExponential:
    def test_theta_zero(self):
        st = StateVector.basis_state(2, 1)
        out = apply_string_exponential(st, 0.0, PauliTerm(1.0, "XY"))
        np.testing.assert_allclose(out.amplitudes, st.amplitudes, atol=1e-15)

    def test_half_pi_x(self):
        out = apply_string_exponential(StateVector.basis_state(1, 0), np.pi / 2,
                                       PauliTerm(1.0, "X"))
        assert out.amplitudes[1] == approx(1j, abs=1e-15)

    def test_inverse_restores(self):
        rng = np.random.default_rng(4)
        st = StateVector(3, random_state(rng, 3))
        term = PauliTerm(-1.0, "ZXY")
        back = apply_string_exponential(
            apply_string_exponential(st, 0.7, term), -0.7, term)
        np.testing.assert_allclose(back.amplitudes, st.amplitudes, atol=1e-12)

    def test_requires_unit_coefficient(self):
        with pytest.raises(ValueError):
            apply_string_exponential(StateVector.basis_state(1, 0), 0.1,
                                     PauliTerm(0.5, "X"))


class TestApplyExcitation:
    @pytest.mark.parametrize("pool_kind", ["uccsd", "qubit-adapt",
                                           "qubit-excitation"])
    def test_theta_zero_identity_all_kinds(self, pool_kind):
        rng = np.random.default_rng(5)
        st = StateVector(4, random_state(rng, 4))
        for exc in build_pool(pool_kind, 4, 2):
            out = apply_excitation(st, exc, 0.0)
            np.testing.assert_allclose(out.amplitudes, st.amplitudes,
                                       atol=1e-15)

    def test_uccsd_single_matches_dense_expm(self):
        # generator with a Z chain: (1/2)(X0 Z1 Y2 - Y0 Z1 X2) on 4 qubits
        pool = build_pool("uccsd", 4, 2)
        exc = [e for e in pool if e.kind == "uccsd-single"
               and e.indices == (0, 2)][0]
        g = np.zeros((16, 16), dtype=complex)
        for term in exc.generator_terms:
            g += kron_matrix(PauliSum(4, 0, [term]))
        rng = np.random.default_rng(6)
        for _ in range(5):
            theta = rng.uniform(-np.pi, np.pi)
            st = StateVector(4, random_state(rng, 4))
            out = apply_excitation(st, exc, theta)
            ref = expm(1j * theta * g) @ st.amplitudes
            np.testing.assert_allclose(out.amplitudes, ref, atol=1e-10)

    def test_uccsd_double_matches_dense_expm(self):
        pool = build_pool("uccsd", 6, 2)
        exc = [e for e in pool if e.kind == "uccsd-double"][0]
        dim = 2 ** 6
        g = np.zeros((dim, dim), dtype=complex)
        for term in exc.generator_terms:
            g += kron_matrix(PauliSum(6, 0, [term]))
        rng = np.random.default_rng(7)
        theta = 0.83
        st = StateVector(6, random_state(rng, 6))
        out = apply_excitation(st, exc, theta)
        ref = expm(1j * theta * g) @ st.amplitudes
        np.testing.assert_allclose(out.amplitudes, ref, atol=1e-10)

    def test_qe_equals_uccsd_with_empty_chains(self):
        # contiguous (0,1,2,3): both Z chains are empty
        qe = [e for e in build_pool("qubit-excitation", 4, 2)
              if e.kind == "qe-double"][0]
        uc = [e for e in build_pool("uccsd", 4, 2)
              if e.kind == "uccsd-double"][0]
        rng = np.random.default_rng(8)
        st = StateVector(4, random_state(rng, 4))
        out_qe = apply_excitation(st, qe, 0.41)
        out_uc = apply_excitation(st, uc, 0.41)
        np.testing.assert_allclose(out_qe.amplitudes, out_uc.amplitudes,
                                   atol=1e-12)

    @pytest.mark.parametrize("pool_kind", ["uccsd", "qubit-adapt",
                                           "qubit-excitation"])
    def test_unitarity_and_reversal(self, pool_kind):
        rng = np.random.default_rng(9)
        st = StateVector(4, random_state(rng, 4))
        for exc in build_pool(pool_kind, 4, 2):
            theta = rng.uniform(-2, 2)
            out = apply_excitation(st, exc, theta)
            assert out.norm() == approx(1.0, abs=1e-10)
            back = apply_excitation(out, exc, -theta)
            np.testing.assert_allclose(back.amplitudes, st.amplitudes,
                                       atol=1e-12)


class TestCountedExpectation:
    def test_single_call_increments_once(self, h2):
        counter = ExperimentCounter()
        st = hartree_fock_state(4, 2)
        counted_expectation(h2, st, counter)
        assert counter.count == 1

    def test_k_calls(self, h2):
        counter = ExperimentCounter()
        st = hartree_fock_state(4, 2)
        for _ in range(7):
            counted_expectation(h2, st, counter)
        assert counter.count == 7

    def test_value_matches_expectation(self, h2):
        from paravqe.state import expectation
        counter = ExperimentCounter()
        st = hartree_fock_state(4, 2)
        assert counted_expectation(h2, st, counter) == expectation(h2, st)
