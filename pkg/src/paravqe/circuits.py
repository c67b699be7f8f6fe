"""Gate-level verification of the excitation circuits.

The published single- and double-excitation circuits are composed here from
elementary gates and compared against the subspace-rotation matrices, up to
global phase. The drawings do not pin down the qubit-significance convention
or the time direction, so the check searches both qubit orders, both time
directions, and the rotation-angle scaling (x and 2x), and reports whatever
matches instead of assuming a convention. Gates exist only in this
verification path; simulation never uses them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .pools import build_pool
from .state import (StateVector, _exp_unit_string,
                    apply_double_qubit_excitation,
                    apply_single_qubit_excitation)

_I = np.eye(2, dtype=np.complex128)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
_H = (_X + _Z) / np.sqrt(2.0)


def _rx(phi):
    return np.cos(phi / 2) * _I - 1j * np.sin(phi / 2) * _X


def _ry(phi):
    return np.cos(phi / 2) * _I - 1j * np.sin(phi / 2) * _Y


def _rz(phi):
    return np.cos(phi / 2) * _I - 1j * np.sin(phi / 2) * _Z


def _gate(n, mat, q):
    out = np.array([[1.0]], dtype=np.complex128)
    for p in reversed(range(n)):
        out = np.kron(out, mat if p == q else _I)
    return out


def _cnot(n, ctrl, targ):
    dim = 1 << n
    u = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        row = col ^ (1 << targ) if (col >> ctrl) & 1 else col
        u[row, col] = 1.0
    return u


def _compose(ops, n):
    u = np.eye(1 << n, dtype=np.complex128)
    for op in ops:
        u = op @ u
    return u


def single_excitation_rotation(x: float) -> np.ndarray:
    """The 4x4 SO(4) rotation mixing |01> and |10>."""
    c, s = np.cos(x), np.sin(x)
    m = np.eye(4, dtype=np.complex128)
    m[1, 1], m[1, 2], m[2, 1], m[2, 2] = c, -s, s, c
    return m


def double_excitation_rotation(x: float) -> np.ndarray:
    """The 16x16 SO(16) rotation mixing |0011> and |1100>."""
    c, s = np.cos(x), np.sin(x)
    m = np.eye(16, dtype=np.complex128)
    m[3, 3], m[3, 12], m[12, 3], m[12, 12] = c, -s, s, c
    return m


def single_excitation_circuit(theta: float, q_i: int, q_k: int) -> "list[np.ndarray]":
    """Gate sequence of the published 2-CNOT single-excitation circuit, in
    drawn (left-to-right) order."""
    n = 2
    return [
        _gate(n, _rz(np.pi / 2), q_k),
        _gate(n, _rx(np.pi / 2), q_k) @ _gate(n, _rx(np.pi / 2), q_i),
        _cnot(n, q_k, q_i),
        _gate(n, _rx(theta), q_k) @ _gate(n, _rz(theta), q_i),
        _cnot(n, q_k, q_i),
        _gate(n, _rx(-np.pi / 2), q_k) @ _gate(n, _rx(-np.pi / 2), q_i),
        _gate(n, _rz(-np.pi / 2), q_k),
    ]


def double_excitation_circuit(theta: float, q_i: int, q_j: int, q_k: int,
                              q_l: int) -> "list[np.ndarray]":
    """Gate sequence of the published 13-CNOT double-excitation circuit, in
    drawn (left-to-right) order."""
    n = 4
    t8 = theta / 8
    g, cx = _gate, _cnot
    return [
        cx(n, q_l, q_k) @ cx(n, q_j, q_i),
        g(n, _X, q_k) @ g(n, _X, q_i),
        cx(n, q_l, q_j),
        g(n, _ry(t8), q_l) @ g(n, _H, q_k),
        cx(n, q_l, q_k),
        g(n, _ry(-t8), q_l) @ g(n, _H, q_i),
        cx(n, q_l, q_i),
        g(n, _ry(t8), q_l),
        cx(n, q_l, q_k),
        g(n, _ry(-t8), q_l) @ g(n, _H, q_j),
        cx(n, q_l, q_j),
        g(n, _ry(t8), q_l),
        cx(n, q_l, q_k),
        g(n, _ry(-t8), q_l),
        cx(n, q_l, q_i),
        g(n, _ry(t8), q_l) @ g(n, _H, q_i),
        cx(n, q_l, q_k),
        g(n, _ry(-t8), q_l) @ g(n, _H, q_k) @ g(n, _rz(-np.pi / 2), q_j),
        cx(n, q_l, q_j),
        g(n, _rz(np.pi / 2), q_l) @ g(n, _rz(-np.pi / 2), q_j),
        g(n, _X, q_k) @ g(n, _ry(-np.pi / 2), q_j) @ g(n, _X, q_i),
        cx(n, q_l, q_k) @ cx(n, q_j, q_i),
    ]


def phase_distance(u: np.ndarray, v: np.ndarray) -> float:
    """max |u - e^{i phi} v| minimized over the global phase phi."""
    flat = np.argmax(np.abs(v))
    idx = np.unravel_index(flat, v.shape)
    if abs(u[idx]) < 1e-12:
        return float(np.max(np.abs(u - v)))
    phase = u[idx] / v[idx]
    phase /= abs(phase)
    return float(np.max(np.abs(u - phase * v)))


@dataclass
class ConventionMatch:
    qubit_order: str     # e.g. "i..l ascending" (wire i least significant)
    time_direction: str  # "left-to-right" | "right-to-left"
    angle_scale: int     # circuit angle = scale * matrix angle
    max_deviation: float


@dataclass
class CircuitCheck:
    name: str
    matches: "list[ConventionMatch]" = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.matches)


GLOBAL_PHASE_TOL = 1e-9


def verify_single_circuit(angles=None) -> CircuitCheck:
    angles = angles if angles is not None else _default_angles()
    wire_sets = [("i,k ascending", (0, 1)), ("i,k descending", (1, 0))]
    check = CircuitCheck("single-excitation circuit vs rotation matrix")
    for order_name, wires in wire_sets:
        for time_name, reverse in (("left-to-right", False), ("right-to-left", True)):
            for scale in (1, 2):
                worst = 0.0
                for x in angles:
                    ops = single_excitation_circuit(scale * x, *wires)
                    if reverse:
                        ops = ops[::-1]
                    u = _compose(ops, 2)
                    worst = max(worst, phase_distance(u, single_excitation_rotation(x)))
                if worst < GLOBAL_PHASE_TOL:
                    check.matches.append(
                        ConventionMatch(order_name, time_name, scale, worst))
    return check


def verify_double_circuit(angles=None) -> CircuitCheck:
    angles = angles if angles is not None else _default_angles()
    wire_sets = [("i..l ascending", (0, 1, 2, 3)), ("i..l descending", (3, 2, 1, 0))]
    check = CircuitCheck("double-excitation circuit vs rotation matrix")
    for order_name, wires in wire_sets:
        for time_name, reverse in (("left-to-right", False), ("right-to-left", True)):
            for scale in (1, 2):
                worst = 0.0
                for x in angles:
                    ops = double_excitation_circuit(scale * x, *wires)
                    if reverse:
                        ops = ops[::-1]
                    u = _compose(ops, 4)
                    worst = max(worst, phase_distance(u, double_excitation_rotation(x)))
                if worst < GLOBAL_PHASE_TOL:
                    check.matches.append(
                        ConventionMatch(order_name, time_name, scale, worst))
    return check


def _default_angles():
    rng = np.random.default_rng(20240917)
    return list(rng.uniform(-np.pi, np.pi, size=5))


def matrix_vs_exponential_deviation(n_angles: int = 20, seed: int = 11) -> float:
    """Worst deviation between the subspace-rotation path and the
    string-exponential path for the Z-free excitations, on random 4-qubit
    states and angles."""
    rng = np.random.default_rng(seed)
    pool = build_pool("qubit-excitation", 4, 2)
    worst = 0.0
    for _ in range(n_angles):
        theta = rng.uniform(-np.pi, np.pi)
        amp = rng.normal(size=16) + 1j * rng.normal(size=16)
        amp /= np.linalg.norm(amp)
        state = StateVector(4, amp)
        for exc in pool:
            if exc.kind == "qe-single":
                direct = apply_single_qubit_excitation(state, *exc.indices, theta)
            else:
                direct = apply_double_qubit_excitation(state, *exc.indices, theta)
            via_exp = state
            for term in exc.generator_terms:
                via_exp = _exp_unit_string(via_exp, theta * term.coeff, term.paulis)
            worst = max(worst, float(np.max(np.abs(direct.amplitudes
                                                   - via_exp.amplitudes))))
    return worst
