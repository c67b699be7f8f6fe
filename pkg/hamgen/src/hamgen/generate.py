"""Fixture generation: molecule spec -> qubit-Hamiltonian JSON on disk.

The emitted schema matches the consumer's Hamiltonian file format exactly
(format_version 1, terms sorted by Pauli string, json indent=1); rerunning
on the same machine reproduces identical bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .fci import fci_ground_energy, spin_orbital_integrals
from .jw import jordan_wigner
from .molecules import MoleculeSpec
from .scf import mo_integrals, run_rhf

FCI_DIMENSION_CAP = 4000   # dense determinant-space solve


@dataclass
class GeneratedHamiltonian:
    molecule: str
    n_qubits: int
    n_electrons: int
    constant: float
    hf_energy: float
    fci_energy: "float | None"
    terms: "list[tuple[float, str]]"

    def to_document(self) -> dict:
        doc = {
            "format_version": 1,
            "molecule": self.molecule,
            "n_qubits": self.n_qubits,
            "n_electrons": self.n_electrons,
            "constant": self.constant,
            "hf_energy": self.hf_energy,
        }
        if self.fci_energy is not None:
            doc["fci_energy"] = self.fci_energy
        doc["terms"] = [{"coeff": c, "paulis": s} for c, s in self.terms]
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=1) + "\n"


def build_hamiltonian(spec: MoleculeSpec) -> GeneratedHamiltonian:
    atoms = spec.atoms_bohr()
    scf = run_rhf(atoms, spec.n_electrons)
    h_mo, g_mo = mo_integrals(scf)
    n_qubits = 2 * h_mo.shape[0]
    h_so, anti = spin_orbital_integrals(h_mo, g_mo)

    fci_energy = None
    if math.comb(n_qubits, spec.n_electrons) <= FCI_DIMENSION_CAP:
        fci_energy = fci_ground_energy(h_so, anti, spec.n_electrons,
                                       scf.e_nuclear)
        if fci_energy > scf.energy + 1e-9:
            raise RuntimeError(
                f"FCI energy {fci_energy} above SCF energy {scf.energy}")

    constant, terms = jordan_wigner(h_so, g_mo, scf.e_nuclear)
    return GeneratedHamiltonian(spec.label or spec.name, n_qubits,
                                spec.n_electrons, constant, scf.energy,
                                fci_energy, terms)


def generate(spec: MoleculeSpec, out_path) -> GeneratedHamiltonian:
    result = build_hamiltonian(spec)
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(result.to_json())
    return result
