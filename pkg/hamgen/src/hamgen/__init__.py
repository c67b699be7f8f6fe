"""Offline STO-3G qubit-Hamiltonian generator: McMurchie-Davidson
integrals, restricted Hartree-Fock, determinant-space FCI references, and
Jordan-Wigner export in the consumer's JSON schema."""

from .generate import GeneratedHamiltonian, build_hamiltonian, generate
from .molecules import MOLECULES, MoleculeSpec
from .scf import ScfError, ScfResult, run_rhf

__version__ = "0.1.0"
