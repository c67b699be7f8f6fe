import numpy as np
import pytest

from hamgen import MOLECULES, build_hamiltonian


@pytest.fixture(scope="session")
def h2_result():
    return build_hamiltonian(MOLECULES["H2"])


@pytest.fixture(scope="session")
def he_result():
    return build_hamiltonian(MOLECULES["He"])


@pytest.fixture(scope="session")
def lih_result():
    return build_hamiltonian(MOLECULES["LiH"])


PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense_from_terms(constant, terms, n_qubits):
    dim = 2 ** n_qubits
    mat = constant * np.eye(dim, dtype=complex)
    for coeff, string in terms:
        block = np.array([[1.0]], dtype=complex)
        for q in reversed(range(n_qubits)):
            block = np.kron(block, PAULI_MATS[string[q]])
        mat += coeff * block
    return mat
