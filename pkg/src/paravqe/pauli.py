"""Pauli-string terms and real-weighted Pauli sums (qubit Hamiltonians).

Conventions used throughout the package:
  * qubit p corresponds to bit p of the basis-state index (qubit 0 is the
    least significant bit),
  * ``paulis[p]`` is the single-qubit operator acting on qubit p,
  * an occupied spin-orbital is a qubit in |1>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

PAULI_CHARS = frozenset("IXYZ")

MERGE_DROP_TOL = 1e-12


@dataclass(frozen=True)
class PauliTerm:
    """One real-weighted Pauli string. ``coeff`` is in Hartree for
    Hamiltonian terms and dimensionless for excitation generators."""

    coeff: float
    paulis: str

    def __post_init__(self):
        if not math.isfinite(self.coeff):
            raise ValueError(f"non-finite coefficient {self.coeff!r}")
        bad = set(self.paulis) - PAULI_CHARS
        if bad:
            raise ValueError(f"invalid Pauli characters {sorted(bad)} in {self.paulis!r}")

    @property
    def n_qubits(self) -> int:
        return len(self.paulis)

    @property
    def weight(self) -> int:
        """Number of non-identity positions (X/Y/Z support)."""
        return sum(1 for c in self.paulis if c != "I")

    def masks(self) -> tuple[int, int, int]:
        """(flip_mask, phase_mask, n_y): X/Y positions flip the addressed bit,
        Y/Z positions contribute a (-1)^bit phase, and each Y contributes a
        factor i."""
        flip = phase = n_y = 0
        for p, c in enumerate(self.paulis):
            if c == "X":
                flip |= 1 << p
            elif c == "Y":
                flip |= 1 << p
                phase |= 1 << p
                n_y += 1
            elif c == "Z":
                phase |= 1 << p
        return flip, phase, n_y

    def __str__(self):
        return f"{self.coeff:+g}*{self.paulis}"


class PauliSum:
    """Immutable real-weighted sum of Pauli strings plus an identity constant.

    Duplicate strings are merged by coefficient addition and terms with
    |coeff| < 1e-12 are dropped, so equal operators load to equal canonical
    forms regardless of input ordering quirks.
    """

    def __init__(self, n_qubits: int, constant: float = 0.0,
                 terms: "list[PauliTerm] | None" = None):
        if n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        if not math.isfinite(constant):
            raise ValueError("constant must be finite")
        merged: dict[str, float] = {}
        for t in terms or []:
            if len(t.paulis) != n_qubits:
                raise ValueError(
                    f"term {t.paulis!r} has length {len(t.paulis)}, expected {n_qubits}")
            if set(t.paulis) == {"I"}:
                constant += t.coeff
                continue
            merged[t.paulis] = merged.get(t.paulis, 0.0) + t.coeff
        self.n_qubits = n_qubits
        self.constant = float(constant)
        self.terms: tuple[PauliTerm, ...] = tuple(
            PauliTerm(c, s) for s, c in merged.items() if abs(c) >= MERGE_DROP_TOL)
        self._action_cache = None
        self._kernel_cache = None

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __repr__(self):
        return (f"PauliSum(n_qubits={self.n_qubits}, constant={self.constant:.6g}, "
                f"{len(self.terms)} terms)")

    def compiled_actions(self):
        """Per-term (flip_mask, phase_mask, prefactor) arrays for fast
        repeated application; built once, the sum itself never changes."""
        if self._action_cache is None:
            flips = np.empty(len(self.terms), dtype=np.int64)
            phases = np.empty(len(self.terms), dtype=np.int64)
            prefs = np.empty(len(self.terms), dtype=np.complex128)
            for t_i, term in enumerate(self.terms):
                flip, phase, n_y = term.masks()
                flips[t_i] = flip
                phases[t_i] = phase
                prefs[t_i] = term.coeff * (1j) ** (n_y % 4)
            self._action_cache = (flips, phases, prefs)
        return self._action_cache

    # matrices bigger than this stay on the term-by-term path
    KERNEL_ENTRY_BUDGET = 8_000_000

    def expectation_kernel(self):
        """Stacked (terms x dim) gather indices and sign factors so that
        <psi|H|psi> = constant + Re[prefs . ((signs * psi[perm]) @ conj(psi))].

        Built lazily, used for Hamiltonians small enough to afford the
        memory; returns None above the entry budget.
        """
        if self._kernel_cache is None:
            dim = 1 << self.n_qubits
            if len(self.terms) * dim > self.KERNEL_ENTRY_BUDGET or not self.terms:
                self._kernel_cache = (None,)
            else:
                flips, phases, prefs = self.compiled_actions()
                idx = np.arange(dim, dtype=np.int64)
                perms = idx[None, :] ^ flips[:, None]
                signs = 1.0 - 2.0 * (np.bitwise_count(perms & phases[:, None]) & 1)
                self._kernel_cache = (perms.astype(np.int32), signs, prefs)
        kernel = self._kernel_cache
        return None if kernel[0] is None else kernel
