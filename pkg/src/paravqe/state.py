"""Statevector register, Hartree-Fock preparation, excitation application and
the counted expectation-value "experiment" primitive.

Every apply_* function allocates a fresh state; inputs are never mutated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pauli import PauliSum, PauliTerm

NORM_TOL = 1e-8
IMAG_TOL = 1e-10


class DimensionError(ValueError):
    """Operator and state qubit counts do not match."""


class NormalizationError(ValueError):
    """State norm drifted beyond tolerance."""


class HermiticityError(ValueError):
    """Expectation value acquired a non-negligible imaginary part."""


@dataclass
class StateVector:
    """2^n complex amplitudes; index bit p is qubit p."""

    n_qubits: int
    amplitudes: np.ndarray

    @classmethod
    def zero_state(cls, n_qubits: int) -> "StateVector":
        amp = np.zeros(1 << n_qubits, dtype=np.complex128)
        amp[0] = 1.0
        return cls(n_qubits, amp)

    @classmethod
    def basis_state(cls, n_qubits: int, index: int) -> "StateVector":
        amp = np.zeros(1 << n_qubits, dtype=np.complex128)
        amp[index] = 1.0
        return cls(n_qubits, amp)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes.copy())


@dataclass
class ExperimentCounter:
    """Number of expectation-value measurements performed so far."""

    count: int = 0

    def increment(self) -> None:
        self.count += 1


def hartree_fock_state(n_qubits: int, n_electrons: int) -> StateVector:
    """Computational basis state with qubits 0..n_electrons-1 in |1>."""
    if not 0 <= n_electrons <= n_qubits:
        raise ValueError(
            f"n_electrons={n_electrons} outside [0, n_qubits={n_qubits}]")
    return StateVector.basis_state(n_qubits, (1 << n_electrons) - 1)


def _check_dims(n_term: int, state: StateVector) -> None:
    if n_term != state.n_qubits:
        raise DimensionError(
            f"operator acts on {n_term} qubits, state has {state.n_qubits}")


def _indices(n_qubits: int) -> np.ndarray:
    return np.arange(1 << n_qubits, dtype=np.int64)


def _string_action(amp: np.ndarray, idx: np.ndarray, flip: int, phase_mask: int,
                   prefactor: complex) -> np.ndarray:
    """prefactor * (signs) * amp, permuted by the XOR flip mask."""
    signs = 1.0 - 2.0 * (np.bitwise_count(idx & phase_mask) & 1)
    src = (prefactor * signs) * amp
    if flip:
        return src[idx ^ flip]
    return src


def apply_pauli_string(term: PauliTerm, state: StateVector) -> StateVector:
    """coeff * P|psi> with exact phase tracking (X flips a bit, Y flips with
    +-i, Z applies -1 on set bits)."""
    _check_dims(term.n_qubits, state)
    flip, phase_mask, n_y = term.masks()
    pref = term.coeff * (1j) ** (n_y % 4)
    idx = _indices(state.n_qubits)
    return StateVector(state.n_qubits,
                       _string_action(state.amplitudes, idx, flip, phase_mask, pref))


def expectation(H: PauliSum, state: StateVector) -> float:
    """constant + sum_t coeff_t <psi|P_t|psi>, in Hartree.

    Requires a normalized state; an imaginary residue above 1e-10 signals a
    corrupted (non-Hermitian) Hamiltonian and raises.
    """
    if H.n_qubits != state.n_qubits:
        raise DimensionError(
            f"Hamiltonian on {H.n_qubits} qubits, state on {state.n_qubits}")
    if abs(state.norm() - 1.0) > NORM_TOL:
        raise NormalizationError(f"state norm {state.norm()!r} is not 1")
    amp = state.amplitudes
    kernel = H.expectation_kernel()
    if kernel is not None:
        perms, signs, prefs = kernel
        value = complex(H.constant) + (signs * amp[perms]) @ amp.conj() @ prefs
    else:
        idx = _indices(state.n_qubits)
        value = complex(H.constant)
        flips, phases, prefs = H.compiled_actions()
        for t_i in range(len(prefs)):
            out = _string_action(amp, idx, int(flips[t_i]), int(phases[t_i]),
                                 prefs[t_i])
            value += np.vdot(amp, out)
    if abs(value.imag) > IMAG_TOL:
        raise HermiticityError(
            f"expectation has imaginary part {value.imag:g} (> {IMAG_TOL:g})")
    return float(value.real)


def counted_expectation(H: PauliSum, state: StateVector,
                        counter: ExperimentCounter) -> float:
    """One quantum experiment: evaluate the energy and tick the counter."""
    value = expectation(H, state)
    counter.increment()
    return value


def apply_string_exponential(state: StateVector, theta: float,
                             term: PauliTerm) -> StateVector:
    """exp[i*theta*coeff*P]|psi> = cos(theta)|psi> + i sin(theta) coeff*P|psi>.

    Valid because P^2 = I; requires coeff = +-1 (fold any magnitude into
    theta before calling).
    """
    if abs(abs(term.coeff) - 1.0) > 1e-14:
        raise ValueError(f"string exponential needs coeff +-1, got {term.coeff!r}")
    _check_dims(term.n_qubits, state)
    rotated = apply_pauli_string(term, state)
    amp = math.cos(theta) * state.amplitudes + 1j * math.sin(theta) * rotated.amplitudes
    return StateVector(state.n_qubits, amp)


def _exp_unit_string(state: StateVector, angle: float, paulis: str) -> StateVector:
    """exp[i*angle*P] for a bare (coefficient-1) string."""
    return apply_string_exponential(state, angle, PauliTerm(1.0, paulis))


def apply_single_qubit_excitation(state: StateVector, i: int, k: int,
                                  theta: float) -> StateVector:
    """SO(4) rotation mixing the |01>/|10> pair states of qubits (i, k).

    In the 2-qubit subspace the local index is (q_i << 1) | q_k; the rotation
    sends local |01> to cos|01> + sin|10> and |10> to -sin|01> + cos|10>,
    which equals exp[i (theta/2) (X_i Y_k - Y_i X_k)].
    """
    n = state.n_qubits
    if i == k:
        raise ValueError("single excitation needs two distinct qubits")
    for q in (i, k):
        if not 0 <= q < n:
            raise ValueError(f"qubit index {q} out of range for {n} qubits")
    idx = _indices(n)
    # a: q_k=1, q_i=0 (local |01>); b = a with both bits toggled (local |10>)
    a = idx[(((idx >> k) & 1) == 1) & (((idx >> i) & 1) == 0)]
    b = a ^ ((1 << i) | (1 << k))
    new = state.amplitudes.copy()
    c, s = math.cos(theta), math.sin(theta)
    amp_a, amp_b = state.amplitudes[a], state.amplitudes[b]
    new[a] = c * amp_a - s * amp_b
    new[b] = s * amp_a + c * amp_b
    return StateVector(n, new)


def apply_double_qubit_excitation(state: StateVector, i: int, j: int, k: int,
                                  l: int, theta: float) -> StateVector:
    """SO(16) rotation mixing local |0011> and |1100> of qubits (i, j, k, l).

    Local bits are ordered (q_i, q_j, q_k, q_l) from least significant, so
    local index 3 has q_i = q_j = 1 and local index 12 has q_k = q_l = 1.
    Column 3 maps to cos|3> + sin|12>, column 12 to -sin|3> + cos|12>; this
    equals the product of the eight commuting string exponentials of the
    Z-free double excitation generator.
    """
    n = state.n_qubits
    quad = (i, j, k, l)
    if len(set(quad)) != 4:
        raise ValueError(f"double excitation needs four distinct qubits, got {quad}")
    for q in quad:
        if not 0 <= q < n:
            raise ValueError(f"qubit index {q} out of range for {n} qubits")
    idx = _indices(n)
    occ = (((idx >> i) & 1) == 1) & (((idx >> j) & 1) == 1)
    vac = (((idx >> k) & 1) == 0) & (((idx >> l) & 1) == 0)
    a = idx[occ & vac]                                  # local |0011>
    b = a ^ ((1 << i) | (1 << j) | (1 << k) | (1 << l))  # local |1100>
    new = state.amplitudes.copy()
    c, s = math.cos(theta), math.sin(theta)
    amp_a, amp_b = state.amplitudes[a], state.amplitudes[b]
    new[a] = c * amp_a - s * amp_b
    new[b] = s * amp_a + c * amp_b
    return StateVector(n, new)


def apply_excitation(state: StateVector, exc, theta: float) -> StateVector:
    """Dispatch over pool kinds.

    Qubit-Excitation kinds use the direct subspace rotation; Qubit-ADAPT
    kinds apply their one string exponential; UCCSD kinds apply the ordered
    product of their commuting string exponentials (Z chains included). The
    generator terms mutually commute, so the fixed textual order is exact.
    """
    kind = exc.kind
    if kind == "qe-single":
        return apply_single_qubit_excitation(state, *exc.indices, theta)
    if kind == "qe-double":
        return apply_double_qubit_excitation(state, *exc.indices, theta)
    if kind == "qadapt-string":
        return apply_string_exponential(state, theta, exc.generator_terms[0])
    if kind in ("uccsd-single", "uccsd-double"):
        out = state
        for term in exc.generator_terms:
            out = _exp_unit_string(out, theta * term.coeff, term.paulis)
        return out
    raise ValueError(f"unknown excitation kind {kind!r}")
