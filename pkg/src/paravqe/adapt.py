"""Adaptive VQE driver: excitation selection, per-iteration global
optimization, convergence and the experiment/CNOT ledger."""

from __future__ import annotations

from dataclasses import dataclass, field
import numpy as np

from .optimize import (DEFAULT_CONFIG, NelderMeadOptions, Objective,
                       ParabolicConfig, nelder_mead, parabolic_1d,
                       parabolic_nd)
from .pauli import PauliSum
from .pools import Excitation, build_pool
from .state import (ExperimentCounter, StateVector, apply_excitation,
                    counted_expectation, hartree_fock_state)

OPTIMIZER_KINDS = ("parabolic", "nelder-mead")
SELECTOR_KINDS = ("energy", "gradient")

SELECTION_GRADIENT_DELTA = 1e-6
SELECTION_GRADIENT_FLOOR = 1e-12


@dataclass
class AnsatzElement:
    excitation: Excitation
    theta: float


@dataclass
class LedgerEntry:
    """One adaptive iteration (iteration 0 is the Hartree-Fock baseline)."""

    iteration: int
    excitation: "Excitation | None"
    theta: float
    energy: float
    error: "float | None"          # energy - exact reference, when available
    cum_experiments: int
    cum_cnots: int

    @property
    def excitation_label(self) -> str:
        return self.excitation.label if self.excitation is not None else ""


@dataclass
class RunRecord:
    entries: "list[LedgerEntry]" = field(default_factory=list)
    status: str = "max-iterations"   # "converged" | "max-iterations" | "stalled"
    ansatz: "list[AnsatzElement]" = field(default_factory=list)

    @property
    def final_energy(self) -> float:
        return self.entries[-1].energy

    @property
    def total_experiments(self) -> int:
        return self.entries[-1].cum_experiments

    @property
    def total_cnots(self) -> int:
        return self.entries[-1].cum_cnots

    def iteration_increments(self) -> "list[int]":
        """Per-entry experiment increments (double-entry check against the
        shared counter)."""
        out = []
        prev = 0
        for e in self.entries:
            out.append(e.cum_experiments - prev)
            prev = e.cum_experiments
        return out


@dataclass
class AdaptConfig:
    conv_threshold: float = 1e-9        # Hartree per iteration
    max_iterations: int = 50
    parabolic: ParabolicConfig = field(default_factory=ParabolicConfig)
    nm_budget_per_param: int = 200      # Nelder-Mead evals per (n+1)

    def __post_init__(self):
        if self.conv_threshold < 0 or self.max_iterations < 0:
            raise ValueError("thresholds must be non-negative")


def select_by_energy(pool, ansatz_state: StateVector, base_energy: float,
                     H: PauliSum, counter: ExperimentCounter,
                     cfg: ParabolicConfig = DEFAULT_CONFIG):
    """Run the 1-D parabolic minimizer on every candidate's excitation
    parameter (centered at 0, current energy as the known center value) and
    keep the candidate with the smallest optimized energy.

    Ties go to the lowest pool_id. Returns (excitation, theta_star, e_star);
    theta_star's energy has already been measured, so it is free to reuse.
    """
    if not pool:
        raise ValueError("empty excitation pool")
    best = None
    for exc in pool:
        def curve(x, exc=exc):
            return counted_expectation(H, apply_excitation(ansatz_state, exc, x),
                                       counter)
        res = parabolic_1d(curve, 0.0, base_energy, cfg)
        if best is None or res.value < best[2]:
            best = (exc, res.x, res.value)
    return best


def select_by_gradient(pool, ansatz_state: StateVector, base_energy: float,
                       H: PauliSum, counter: ExperimentCounter,
                       delta: float = SELECTION_GRADIENT_DELTA):
    """Forward-difference energy gradient at parameter 0 for every candidate
    (one evaluation each, the center is already known); returns the
    excitation with the largest magnitude and that magnitude.

    Ties go to the lowest pool_id.
    """
    if not pool:
        raise ValueError("empty excitation pool")
    best = None
    for exc in pool:
        shifted = counted_expectation(H, apply_excitation(ansatz_state, exc, delta),
                                      counter)
        magnitude = abs((shifted - base_energy) / delta)
        if best is None or magnitude > best[1]:
            best = (exc, magnitude)
    return best


def prepare_ansatz_state(n_qubits: int, n_electrons: int, ansatz,
                         thetas=None) -> StateVector:
    """Hartree-Fock reference with the ansatz applied in order."""
    state = hartree_fock_state(n_qubits, n_electrons)
    for pos, element in enumerate(ansatz):
        theta = element.theta if thetas is None else thetas[pos]
        state = apply_excitation(state, element.excitation, theta)
    return state


def run_adapt(H: PauliSum, n_electrons: int, pool_kind: str,
              optimizer_kind: str = "parabolic", selector_kind: str = "energy",
              config: "AdaptConfig | None" = None,
              exact_energy: "float | None" = None,
              pool: "list[Excitation] | None" = None) -> RunRecord:
    """Grow the ansatz one excitation at a time from the Hartree-Fock state.

    Each iteration selects a candidate from the pool (which keeps all its
    elements and may repeat choices), appends it as one new parameter
    (initialized at the selection optimum for the energy strategy, at 0 for
    the gradient strategy), runs exactly one global optimization pass over
    all current parameters, and logs energy plus cumulative experiment and
    CNOT counts. Stops when the per-iteration energy improvement falls below
    ``conv_threshold``, when ``max_iterations`` is reached, or when no
    candidate improves at all ("stalled").
    """
    if optimizer_kind not in OPTIMIZER_KINDS:
        raise ValueError(f"unknown optimizer {optimizer_kind!r}")
    if selector_kind not in SELECTOR_KINDS:
        raise ValueError(f"unknown selector {selector_kind!r}")
    cfg = config or AdaptConfig()
    if pool is None:
        pool = build_pool(pool_kind, H.n_qubits, n_electrons)

    counter = ExperimentCounter()
    record = RunRecord()
    ansatz: "list[AnsatzElement]" = []
    cum_cnots = 0

    def err(e):
        return None if exact_energy is None else e - exact_energy

    state = hartree_fock_state(H.n_qubits, n_electrons)
    energy = counted_expectation(H, state, counter)   # baseline measurement
    record.entries.append(LedgerEntry(0, None, 0.0, energy, err(energy),
                                      counter.count, cum_cnots))

    for iteration in range(1, cfg.max_iterations + 1):
        if selector_kind == "energy":
            exc, theta0, e_start = select_by_energy(pool, state, energy, H,
                                                    counter, cfg.parabolic)
            improved = e_start < energy
        else:
            exc, magnitude = select_by_gradient(pool, state, energy, H, counter)
            theta0, e_start = 0.0, energy
            improved = magnitude > SELECTION_GRADIENT_FLOOR
        if not improved:
            record.status = "stalled"
            record.entries.append(LedgerEntry(iteration, None, 0.0, energy,
                                              err(energy), counter.count,
                                              cum_cnots))
            break

        ansatz.append(AnsatzElement(exc, theta0))
        params = np.array([el.theta for el in ansatz])

        objective = Objective(
            arity=len(params),
            eval=lambda ps: counted_expectation(
                H, prepare_ansatz_state(H.n_qubits, n_electrons, ansatz, ps),
                counter),
            cached_value=(params, e_start),
        )
        if optimizer_kind == "parabolic":
            step = parabolic_nd(objective.eval, params, e_start, cfg.parabolic)
        else:
            opts = NelderMeadOptions(max_evals=cfg.nm_budget_per_param
                                     * (len(params) + 1))
            step = nelder_mead(objective.eval, params, opts, f_init=e_start)

        for pos, element in enumerate(ansatz):
            element.theta = float(step.x[pos])
        state = prepare_ansatz_state(H.n_qubits, n_electrons, ansatz)
        improvement = energy - step.value
        energy = step.value
        cum_cnots += exc.cnot_cost
        record.entries.append(LedgerEntry(iteration, exc, theta0, energy,
                                          err(energy), counter.count, cum_cnots))
        if improvement < cfg.conv_threshold:
            record.status = "converged"
            break

    record.ansatz = ansatz
    return record
