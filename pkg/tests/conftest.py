import json
from pathlib import Path

import numpy as np
import pytest

from paravqe import hamfile
from paravqe.pauli import PauliSum, PauliTerm

FIXTURE_DIR = Path(__file__).parent / "fixtures"

PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def kron_matrix(H: PauliSum) -> np.ndarray:
    """Independent dense build for oracle checks (qubit 0 least significant)."""
    dim = 2 ** H.n_qubits
    mat = H.constant * np.eye(dim, dtype=complex)
    for term in H.terms:
        block = np.array([[1.0]], dtype=complex)
        for q in reversed(range(H.n_qubits)):
            block = np.kron(block, PAULI_MATS[term.paulis[q]])
        mat += term.coeff * block
    return mat


def random_state(rng, n_qubits):
    amp = rng.normal(size=2 ** n_qubits) + 1j * rng.normal(size=2 ** n_qubits)
    amp /= np.linalg.norm(amp)
    return amp


def random_pauli_sum(rng, n_qubits, n_terms):
    terms = []
    for _ in range(n_terms):
        while True:
            paulis = "".join(rng.choice(list("IXYZ"), size=n_qubits))
            if set(paulis) != {"I"}:
                break
        terms.append(PauliTerm(float(rng.normal()), paulis))
    return PauliSum(n_qubits, float(rng.normal()), terms)


@pytest.fixture(scope="session")
def h2_file():
    return hamfile.load(FIXTURE_DIR / "h2_sto3g.json")


@pytest.fixture(scope="session")
def h2(h2_file):
    return h2_file.to_pauli_sum()


@pytest.fixture(scope="session")
def h4_file():
    return hamfile.load(FIXTURE_DIR / "h4_sto3g.json")


@pytest.fixture(scope="session")
def h4(h4_file):
    return h4_file.to_pauli_sum()


@pytest.fixture(scope="session")
def h2pair_file():
    return hamfile.load(FIXTURE_DIR / "h2pair_sto3g.json")


@pytest.fixture(scope="session")
def h2pair(h2pair_file):
    return h2pair_file.to_pauli_sum()


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR
