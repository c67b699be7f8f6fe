"""Exact-diagonalization oracle for reference ground-state energies.

Two independent routes: a dense matrix assembled by Kronecker products
(n <= 10 by default, hard cap 12) and a matrix-free iterative eigensolver
driven by repeated sparse Pauli application (up to 16 qubits). Molecular
fixtures are solved in their particle-number sector, which is exact for
number-conserving Hamiltonians.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from .pauli import PauliSum
from .state import StateVector, _indices, _string_action

MAX_QUBITS = 16
DENSE_SWITCH = 10   # auto method boundary
DENSE_CAP = 12      # hard memory cap for the dense route


class SolverError(RuntimeError):
    """Iterative eigensolver failed to converge."""


@dataclass
class SpectrumResult:
    ground_energy: float
    ground_state: "Optional[StateVector]"
    method: str   # "dense" | "iterative"


_PAULI_MATS = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def dense_matrix(H: PauliSum) -> np.ndarray:
    """Hamiltonian matrix assembled term-by-term from Kronecker products
    (qubit 0 least significant, so qubit n-1 is the outermost factor)."""
    if H.n_qubits > DENSE_CAP:
        raise ValueError(f"dense assembly capped at {DENSE_CAP} qubits")
    dim = 1 << H.n_qubits
    mat = H.constant * np.eye(dim, dtype=np.complex128)
    for term in H.terms:
        block = np.array([[1.0]], dtype=np.complex128)
        for q in reversed(range(H.n_qubits)):
            block = np.kron(block, _PAULI_MATS[term.paulis[q]])
        mat += term.coeff * block
    return mat


def sector_indices(n_qubits: int, n_electrons: int) -> np.ndarray:
    """Basis-state indices of the given Hamming weight, ascending."""
    idx = _indices(n_qubits)
    return idx[np.bitwise_count(idx) == n_electrons]


def _apply_sum(H: PauliSum, amp: np.ndarray, idx: np.ndarray) -> np.ndarray:
    out = H.constant * amp
    flips, phases, prefs = H.compiled_actions()
    for t_i in range(len(prefs)):
        out += _string_action(amp, idx, int(flips[t_i]), int(phases[t_i]),
                              prefs[t_i])
    return out


def _iterative_ground(H: PauliSum, sector: "np.ndarray | None",
                      maxiter: "int | None"):
    dim_full = 1 << H.n_qubits
    idx = _indices(H.n_qubits)

    if sector is None:
        def matvec(x):
            return _apply_sum(H, x.astype(np.complex128), idx)
        dim = dim_full
    else:
        def matvec(x):
            full = np.zeros(dim_full, dtype=np.complex128)
            full[sector] = x
            return _apply_sum(H, full, idx)[sector]
        dim = sector.size

    if dim == 1:
        e = matvec(np.ones(1)).real
        return float(e[0]), np.ones(1, dtype=np.complex128)

    op = LinearOperator((dim, dim), matvec=matvec, dtype=np.complex128)
    v0 = np.full(dim, 1.0 / np.sqrt(dim))   # deterministic start
    try:
        vals, vecs = eigsh(op, k=1, which="SA", v0=v0,
                           maxiter=maxiter if maxiter else 100 * dim)
    except ArpackNoConvergence as exc:
        residual = float("nan")
        if len(exc.eigenvalues) and exc.eigenvectors.size:
            v = exc.eigenvectors[:, 0]
            residual = float(np.linalg.norm(matvec(v) - exc.eigenvalues[0] * v))
        raise SolverError(
            f"iterative eigensolver did not converge (residual {residual:g})"
        ) from exc
    return float(vals[0]), vecs[:, 0]


def exact_ground_energy(H: PauliSum, particle_sector: "int | None" = None,
                        method: "str | None" = None,
                        maxiter: "int | None" = None) -> SpectrumResult:
    """Smallest eigenvalue of the Hamiltonian, optionally restricted to the
    basis states of one Hamming weight."""
    n = H.n_qubits
    if n > MAX_QUBITS:
        raise ValueError(f"exact diagonalization capped at {MAX_QUBITS} qubits")
    if method is None:
        method = "dense" if n <= DENSE_SWITCH else "iterative"
    if method not in ("dense", "iterative"):
        raise ValueError(f"unknown method {method!r}")

    sector = None
    if particle_sector is not None:
        sector = sector_indices(n, particle_sector)

    if method == "dense":
        mat = dense_matrix(H)
        if sector is not None:
            mat = mat[np.ix_(sector, sector)]
        vals, vecs = np.linalg.eigh(mat)
        energy, vec = float(vals[0]), vecs[:, 0]
    else:
        energy, vec = _iterative_ground(H, sector, maxiter)

    if sector is not None:
        full = np.zeros(1 << n, dtype=np.complex128)
        full[sector] = vec
        vec = full
    vec = vec / np.linalg.norm(vec)
    return SpectrumResult(energy, StateVector(n, vec.astype(np.complex128)),
                          method)
