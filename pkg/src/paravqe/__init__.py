"""Adaptive VQE statevector simulator with parabolic optimizers, three
excitation pools, and exact accounting of expectation-value experiments and
CNOT counts."""

from .adapt import (AdaptConfig, AnsatzElement, LedgerEntry, RunRecord,
                    run_adapt, select_by_energy, select_by_gradient)
from .exact import SpectrumResult, exact_ground_energy
from .hamfile import HamiltonianFile, load, parse, save, serialize
from .optimize import (LineResult, NelderMeadOptions, Objective,
                       ParabolicConfig, StepResult, finite_diff_gradient,
                       nelder_mead, parabolic_1d, parabolic_nd)
from .pauli import PauliSum, PauliTerm
from .pools import Excitation, build_pool, cnot_cost, spin_conserving
from .state import (ExperimentCounter, StateVector, apply_double_qubit_excitation,
                    apply_excitation, apply_pauli_string,
                    apply_single_qubit_excitation, apply_string_exponential,
                    counted_expectation, expectation, hartree_fock_state)

__version__ = "0.1.0"
