"""Excitation pools: Adaptive-UCCSD, Qubit-ADAPT and Qubit-Excitation, with
spin-conservation filtering and per-excitation CNOT costs.

Pools range over occupied -> virtual index sets relative to the Hartree-Fock
reference: occupied spin-orbitals are qubits 0..n_electrons-1, virtual ones
n_electrons..n_qubits-1. Spin-down orbitals sit on even qubit indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .pauli import PauliTerm

POOL_KINDS = ("uccsd", "qubit-adapt", "qubit-excitation")

# sigma patterns over (i, k) and (i, j, k, l) with an odd number of Ys,
# in lexicographic order (X < Y)
QADAPT_SINGLE_PATTERNS = ("XY", "YX")
QADAPT_DOUBLE_PATTERNS = ("XXXY", "XXYX", "XYXX", "XYYY",
                          "YXXX", "YXYY", "YYXY", "YYYX")

# signed sigma patterns of the double-excitation generator, textual order
DOUBLE_GENERATOR_PATTERNS = (
    (+1, "XYXX"), (+1, "YXXX"), (+1, "YYYX"), (+1, "YYXY"),
    (-1, "XXYX"), (-1, "XXXY"), (-1, "YXYY"), (-1, "XYYY"),
)


@dataclass(frozen=True)
class Excitation:
    """One pool element.

    ``generator_terms`` carry the 1/2 or 1/8 prefactor and sign folded into
    their coefficients; ``pool_id`` is the element's stable position in its
    pool and breaks all selection ties.
    """

    kind: str
    indices: tuple[int, ...]
    generator_terms: tuple[PauliTerm, ...]
    cnot_cost: int
    pool_id: int

    @property
    def label(self) -> str:
        idx = "-".join(str(q) for q in self.indices)
        if self.kind == "qadapt-string":
            pat = "".join(c for c in self.generator_terms[0].paulis if c != "I")
            return f"qadapt:{pat}:{idx}"
        return f"{self.kind}:{idx}"


def spin_conserving(indices) -> bool:
    """Spin filter: singles need i mod 2 = k mod 2, doubles need
    (i mod 2) + (j mod 2) = (k mod 2) + (l mod 2)."""
    if len(indices) == 2:
        i, k = indices
        return i % 2 == k % 2
    if len(indices) == 4:
        i, j, k, l = indices
        return (i % 2) + (j % 2) == (k % 2) + (l % 2)
    raise ValueError(f"expected 2 or 4 indices, got {len(indices)}")


def _pauli_string(n_qubits: int, placed: dict) -> str:
    chars = ["I"] * n_qubits
    for q, c in placed.items():
        chars[q] = c
    return "".join(chars)


def _single_generator(n_qubits, i, k, z_chain):
    """(1/2)(X_i Y_k - Y_i X_k) [* Z chain over i+1..k-1]."""
    chain = {r: "Z" for r in range(i + 1, k)} if z_chain else {}
    return (
        PauliTerm(+0.5, _pauli_string(n_qubits, {i: "X", k: "Y", **chain})),
        PauliTerm(-0.5, _pauli_string(n_qubits, {i: "Y", k: "X", **chain})),
    )


def _double_generator(n_qubits, i, j, k, l, z_chain):
    """(1/8) * signed eight-string generator [* Z chains over i+1..j-1 and
    k+1..l-1]."""
    chain = {}
    if z_chain:
        chain.update({r: "Z" for r in range(i + 1, j)})
        chain.update({r: "Z" for r in range(k + 1, l)})
    terms = []
    for sign, pat in DOUBLE_GENERATOR_PATTERNS:
        placed = {i: pat[0], j: pat[1], k: pat[2], l: pat[3], **chain}
        terms.append(PauliTerm(sign / 8.0, _pauli_string(n_qubits, placed)))
    return tuple(terms)


def _staircase_cnots(terms) -> int:
    """Textbook staircase cost: 2*(weight - 1) CNOTs per exponentiated
    string, weight counting the full X/Y/Z support."""
    return sum(2 * (t.weight - 1) for t in terms)


def cnot_cost(exc: Excitation) -> int:
    """Circuit cost of one application of the excitation."""
    if exc.kind == "qe-single":
        return 2
    if exc.kind == "qe-double":
        return 13
    if exc.kind == "qadapt-string":
        return 2 * (exc.generator_terms[0].weight - 1)
    if exc.kind in ("uccsd-single", "uccsd-double"):
        return _staircase_cnots(exc.generator_terms)
    raise ValueError(f"unknown excitation kind {exc.kind!r}")


def _index_sets(n_qubits: int, n_electrons: int):
    occ = range(n_electrons)
    virt = range(n_electrons, n_qubits)
    singles = [(i, k) for i in occ for k in virt if spin_conserving((i, k))]
    doubles = [(i, j, k, l)
               for i, j in itertools.combinations(occ, 2)
               for k, l in itertools.combinations(virt, 2)
               if spin_conserving((i, j, k, l))]
    return singles, doubles


def build_pool(kind: str, n_qubits: int, n_electrons: int) -> list[Excitation]:
    """Construct the ordered spin-conserving pool for one of the three kinds.

    Ordering is deterministic: singles in (i, k) order, then doubles in
    (i, j, k, l) order; Qubit-ADAPT expands each index set into its Z-free
    sigma strings in fixed pattern order.
    """
    if kind not in POOL_KINDS:
        raise ValueError(f"unknown pool {kind!r}, expected one of {POOL_KINDS}")
    if n_electrons > n_qubits:
        raise ValueError("more electrons than qubits")
    singles, doubles = _index_sets(n_qubits, n_electrons)
    pool: list[Excitation] = []

    def add(kind_, indices, terms):
        proto = Excitation(kind_, indices, terms, 0, len(pool))
        pool.append(Excitation(kind_, indices, terms, cnot_cost(proto), len(pool)))

    if kind == "uccsd":
        for i, k in singles:
            add("uccsd-single", (i, k), _single_generator(n_qubits, i, k, True))
        for quad in doubles:
            add("uccsd-double", quad, _double_generator(n_qubits, *quad, True))
    elif kind == "qubit-excitation":
        for i, k in singles:
            add("qe-single", (i, k), _single_generator(n_qubits, i, k, False))
        for quad in doubles:
            add("qe-double", quad, _double_generator(n_qubits, *quad, False))
    else:  # qubit-adapt
        for i, k in singles:
            for pat in QADAPT_SINGLE_PATTERNS:
                term = PauliTerm(1.0, _pauli_string(n_qubits, {i: pat[0], k: pat[1]}))
                add("qadapt-string", (i, k), (term,))
        for i, j, k, l in doubles:
            for pat in QADAPT_DOUBLE_PATTERNS:
                placed = {i: pat[0], j: pat[1], k: pat[2], l: pat[3]}
                term = PauliTerm(1.0, _pauli_string(n_qubits, placed))
                add("qadapt-string", (i, j, k, l), (term,))
    return pool
