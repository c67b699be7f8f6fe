"""Qubit-Hamiltonian interchange format (UTF-8 JSON).

Schema (format_version 1):
  molecule      free text
  n_qubits      positive int
  n_electrons   int, Hamming weight of the Hartree-Fock reference
  constant      identity coefficient, Hartree
  hf_energy     optional Hartree-Fock reference energy
  fci_energy    optional exact ground energy in the n_electrons sector
  terms         list of {"coeff": float, "paulis": str}; paulis[p] acts on
                qubit p, so the first character is qubit 0

Parsing then serializing is idempotent.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

from .pauli import PAULI_CHARS, PauliSum, PauliTerm

FORMAT_VERSION = 1


class HamiltonianFileError(ValueError):
    """Malformed Hamiltonian file."""


@dataclass
class HamiltonianFile:
    format_version: int
    molecule: str
    n_qubits: int
    n_electrons: int
    constant: float
    hf_energy: "Optional[float]"
    fci_energy: "Optional[float]"
    terms: "list[tuple[float, str]]"

    def to_pauli_sum(self) -> PauliSum:
        return PauliSum(self.n_qubits, self.constant,
                        [PauliTerm(c, s) for c, s in self.terms])


def _require(doc, key, types):
    if key not in doc:
        raise HamiltonianFileError(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, types):
        raise HamiltonianFileError(f"field {key!r} has wrong type {type(val).__name__}")
    return val


def parse(text: str) -> HamiltonianFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HamiltonianFileError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise HamiltonianFileError("top level must be a JSON object")
    version = _require(doc, "format_version", int)
    if version != FORMAT_VERSION:
        raise HamiltonianFileError(f"unsupported format_version {version}")
    n_qubits = _require(doc, "n_qubits", int)
    n_electrons = _require(doc, "n_electrons", int)
    if n_qubits < 1 or not 0 <= n_electrons <= n_qubits:
        raise HamiltonianFileError(
            f"bad sizes: n_qubits={n_qubits}, n_electrons={n_electrons}")
    constant = float(_require(doc, "constant", (int, float)))
    terms = []
    raw_terms = _require(doc, "terms", list)
    for t_i, entry in enumerate(raw_terms):
        if not isinstance(entry, dict):
            raise HamiltonianFileError(f"terms[{t_i}] is not an object")
        coeff = entry.get("coeff")
        paulis = entry.get("paulis")
        if not isinstance(coeff, (int, float)) or isinstance(coeff, bool):
            raise HamiltonianFileError(f"terms[{t_i}].coeff must be a number")
        if not math.isfinite(coeff):
            raise HamiltonianFileError(f"terms[{t_i}].coeff is not finite")
        if not isinstance(paulis, str) or len(paulis) != n_qubits:
            raise HamiltonianFileError(
                f"terms[{t_i}].paulis must be a string of length {n_qubits}")
        if set(paulis) - PAULI_CHARS:
            raise HamiltonianFileError(
                f"terms[{t_i}].paulis contains characters outside IXYZ")
        terms.append((float(coeff), paulis))
    hf = doc.get("hf_energy")
    fci = doc.get("fci_energy")
    for name, val in (("hf_energy", hf), ("fci_energy", fci)):
        if val is not None and not isinstance(val, (int, float)):
            raise HamiltonianFileError(f"field {name!r} must be a number or absent")
    return HamiltonianFile(version, str(doc.get("molecule", "")), n_qubits,
                           n_electrons, constant,
                           None if hf is None else float(hf),
                           None if fci is None else float(fci), terms)


def load(path) -> HamiltonianFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def serialize(hf: HamiltonianFile) -> str:
    doc = {
        "format_version": hf.format_version,
        "molecule": hf.molecule,
        "n_qubits": hf.n_qubits,
        "n_electrons": hf.n_electrons,
        "constant": hf.constant,
    }
    if hf.hf_energy is not None:
        doc["hf_energy"] = hf.hf_energy
    if hf.fci_energy is not None:
        doc["fci_energy"] = hf.fci_energy
    doc["terms"] = [{"coeff": c, "paulis": s} for c, s in hf.terms]
    return json.dumps(doc, indent=1) + "\n"


def save(hf: HamiltonianFile, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(hf))
