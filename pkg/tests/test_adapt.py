import numpy as np
import pytest
from pytest import approx

from paravqe.adapt import (AdaptConfig, run_adapt, select_by_energy,
                           select_by_gradient)
from paravqe.exact import exact_ground_energy
from paravqe.pools import build_pool
from paravqe.state import (ExperimentCounter, apply_excitation, expectation,
                           hartree_fock_state)


@pytest.fixture(scope="module")
def h2_exact(h2):
    return exact_ground_energy(h2, particle_sector=2).ground_energy


class TestSelectByEnergy:
    def test_h2_picks_double_excitation(self, h2):
        # oracle: exhaustive 1-D scan of every candidate's energy curve
        pool = build_pool("qubit-excitation", 4, 2)
        hf = hartree_fock_state(4, 2)
        e_hf = expectation(h2, hf)
        xs = np.linspace(-0.5, 0.5, 2001)
        scan_best = min(
            ((min(expectation(h2, apply_excitation(hf, exc, x)) for x in xs),
              exc.pool_id) for exc in pool))
        counter = ExperimentCounter()
        exc, theta_star, e_star = select_by_energy(pool, hf, e_hf, h2, counter)
        assert exc.pool_id == scan_best[1]
        assert exc.kind == "qe-double"
        assert e_star <= e_hf
        assert e_star == approx(scan_best[0], abs=1e-4)

    def test_pool_of_one(self, h2):
        pool = build_pool("qubit-excitation", 4, 2)[2:]
        hf = hartree_fock_state(4, 2)
        e_hf = expectation(h2, hf)
        counter = ExperimentCounter()
        exc, _, _ = select_by_energy(pool, hf, e_hf, h2, counter)
        assert exc is pool[0]

    def test_counter_bounds(self, h2):
        pool = build_pool("qubit-excitation", 4, 2)
        hf = hartree_fock_state(4, 2)
        e_hf = expectation(h2, hf)
        counter = ExperimentCounter()
        select_by_energy(pool, hf, e_hf, h2, counter)
        assert 3 * len(pool) <= counter.count <= 6 * len(pool)

    def test_empty_pool_rejected(self, h2):
        hf = hartree_fock_state(4, 2)
        with pytest.raises(ValueError):
            select_by_energy([], hf, 0.0, h2, ExperimentCounter())


class TestSelectByGradient:
    def test_counter_exactly_pool_size(self, h2):
        pool = build_pool("qubit-excitation", 4, 2)
        hf = hartree_fock_state(4, 2)
        e_hf = expectation(h2, hf)
        counter = ExperimentCounter()
        select_by_gradient(pool, hf, e_hf, h2, counter)
        assert counter.count == len(pool)

    def test_matches_central_difference_oracle(self, h2):
        pool = build_pool("qubit-excitation", 4, 2)
        hf = hartree_fock_state(4, 2)
        e_hf = expectation(h2, hf)
        delta = 1e-4
        oracle = max(
            ((abs(expectation(h2, apply_excitation(hf, exc, delta))
                  - expectation(h2, apply_excitation(hf, exc, -delta)))
              / (2 * delta), -exc.pool_id) for exc in pool))
        counter = ExperimentCounter()
        exc, magnitude = select_by_gradient(pool, hf, e_hf, h2, counter)
        assert exc.pool_id == -oracle[1]
        assert magnitude == approx(oracle[0], abs=1e-3)

    def test_pool_of_one_single_eval(self, h2):
        pool = build_pool("qubit-excitation", 4, 2)[:1]
        hf = hartree_fock_state(4, 2)
        counter = ExperimentCounter()
        exc, _ = select_by_gradient(pool, hf, expectation(h2, hf), h2, counter)
        assert exc is pool[0] and counter.count == 1


class TestRunAdapt:
    def test_h2_converges_within_three_iterations(self, h2, h2_exact):
        rec = run_adapt(h2, 2, "qubit-excitation", "parabolic", "energy",
                        exact_energy=h2_exact)
        converged_at = next(e.iteration for e in rec.entries
                            if abs(e.energy - h2_exact) < 1e-8)
        assert converged_at <= 3
        assert rec.status == "converged"

    def test_zero_iterations_gives_baseline_only(self, h2, h2_file):
        rec = run_adapt(h2, 2, "qubit-excitation",
                        config=AdaptConfig(max_iterations=0))
        assert len(rec.entries) == 1
        assert rec.entries[0].iteration == 0
        assert rec.entries[0].energy == approx(h2_file.hf_energy, abs=1e-10)
        assert rec.entries[0].cum_experiments == 1
        assert rec.entries[0].cum_cnots == 0

    def test_energy_monotone_and_variational(self, h2, h2_exact):
        for selector in ("energy", "gradient"):
            rec = run_adapt(h2, 2, "qubit-excitation", "parabolic", selector,
                            exact_energy=h2_exact)
            energies = [e.energy for e in rec.entries]
            assert all(b <= a + 1e-15 for a, b in zip(energies, energies[1:]))
            assert all(e.error >= -1e-9 for e in rec.entries)

    def test_counters_strictly_increasing(self, h2):
        rec = run_adapt(h2, 2, "qubit-excitation")
        counts = [e.cum_experiments for e in rec.entries]
        assert all(b > a for a, b in zip(counts, counts[1:]))

    def test_cumulative_cnots_sum_chosen_costs(self, h2):
        rec = run_adapt(h2, 2, "qubit-excitation")
        total = 0
        for e in rec.entries[1:]:
            if e.excitation is not None:
                total += e.excitation.cnot_cost
            assert e.cum_cnots == total

    def test_experiment_increments_match_paper_structure(self, h2):
        # energy selector + parabolic: iteration n costs n+3+3M without
        # refinements (M = 3 candidates for the H2 qubit-excitation pool)
        rec = run_adapt(h2, 2, "qubit-excitation", "parabolic", "energy")
        incs = rec.iteration_increments()
        assert incs[0] == 1   # Hartree-Fock baseline measurement
        M = 3
        for e in rec.entries[1:]:
            if e.excitation is not None:
                assert incs[e.iteration] == e.iteration + 3 + 3 * M

    def test_gradient_selector_converges(self, h2, h2_exact):
        rec = run_adapt(h2, 2, "qubit-excitation", "parabolic", "gradient",
                        exact_energy=h2_exact)
        assert abs(rec.final_energy - h2_exact) < 1e-8

    def test_nelder_mead_converges(self, h2, h2_exact):
        rec = run_adapt(h2, 2, "qubit-excitation", "nelder-mead", "energy",
                        exact_energy=h2_exact)
        assert abs(rec.final_energy - h2_exact) < 1e-8

    def test_reselection_is_permitted(self, h2):
        rec = run_adapt(h2, 2, "qubit-excitation",
                        config=AdaptConfig(conv_threshold=0.0,
                                           max_iterations=5))
        chosen = [e.excitation.pool_id for e in rec.entries
                  if e.excitation is not None]
        assert len(chosen) >= 2
        assert len(set(chosen)) < len(chosen)

    def test_uccsd_pool_run(self, h2, h2_exact):
        rec = run_adapt(h2, 2, "uccsd", "parabolic", "energy",
                        exact_energy=h2_exact)
        assert abs(rec.final_energy - h2_exact) < 1e-8

    def test_stall_on_symmetric_chain_plateau(self, h4, h4_file):
        # the symmetric linear H4 chain is first-order flat along every pool
        # direction well above the exact ground energy
        ref = exact_ground_energy(h4, particle_sector=4).ground_energy
        rec = run_adapt(h4, 4, "qubit-excitation", "parabolic", "energy",
                        config=AdaptConfig(max_iterations=30),
                        exact_energy=ref)
        assert rec.status == "stalled"
        assert rec.entries[-1].excitation is None
        assert rec.entries[-1].error > 1e-6
        # the stall row still carries its selection cost
        assert rec.entries[-1].cum_experiments > rec.entries[-2].cum_experiments

    def test_total_cost_scaling_on_h2pair(self, h2pair):
        # paper-style total: n(n+1)/2 + 3nM within 25% on a longer run
        ref = exact_ground_energy(h2pair, particle_sector=4).ground_energy
        rec = run_adapt(h2pair, 4, "qubit-excitation", "parabolic", "energy",
                        exact_energy=ref)
        n = rec.entries[-1].iteration
        M = len(build_pool("qubit-excitation", 8, 4))
        formula = n * (n + 1) / 2 + 3 * n * M
        assert rec.total_experiments == approx(formula, rel=0.25)

    def test_invalid_kinds_rejected(self, h2):
        with pytest.raises(ValueError):
            run_adapt(h2, 2, "qubit-excitation", optimizer_kind="bfgs")
        with pytest.raises(ValueError):
            run_adapt(h2, 2, "qubit-excitation", selector_kind="random")
