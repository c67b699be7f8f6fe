"""Command-line entry points.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import circuits, hamfile
from .adapt import (OPTIMIZER_KINDS, SELECTOR_KINDS, AdaptConfig, RunRecord,
                    run_adapt)
from .exact import MAX_QUBITS, SolverError, exact_ground_energy
from .pools import POOL_KINDS
from .state import HermiticityError, NormalizationError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NUMERICAL = 3

CSV_HEADER = "iteration,energy,error,cum_experiments,cum_cnots,excitation"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(value) -> str:
    return "" if value is None else f"{value:.12g}"


def record_to_csv(record: RunRecord) -> str:
    lines = [CSV_HEADER]
    for e in record.entries:
        lines.append(f"{e.iteration},{_fmt(e.energy)},{_fmt(e.error)},"
                     f"{e.cum_experiments},{e.cum_cnots},{e.excitation_label}")
    return "\n".join(lines) + "\n"


REFERENCE_SOLVE_QUBITS = 12


def _reference_energy(ham: hamfile.HamiltonianFile):
    """Exact ground energy in the file's particle sector, for error columns.

    Solved directly up to 12 qubits; beyond that the file's fci_energy is
    trusted when present (the iterative solver still covers files up to 16
    qubits that carry no reference)."""
    if ham.n_qubits <= REFERENCE_SOLVE_QUBITS or (
            ham.fci_energy is None and ham.n_qubits <= MAX_QUBITS):
        result = exact_ground_energy(ham.to_pauli_sum(),
                                     particle_sector=ham.n_electrons)
        return result.ground_energy
    return ham.fci_energy


def _cmd_run(args) -> int:
    try:
        ham = hamfile.load(args.hamiltonian)
    except OSError as exc:
        print(f"cannot read {args.hamiltonian}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except hamfile.HamiltonianFileError as exc:
        print(f"{args.hamiltonian}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    config = AdaptConfig(conv_threshold=args.conv_threshold,
                         max_iterations=args.max_iterations)
    try:
        reference = _reference_energy(ham)
        record = run_adapt(ham.to_pauli_sum(), ham.n_electrons, args.pool,
                           optimizer_kind=args.optimizer,
                           selector_kind=args.selector, config=config,
                           exact_energy=reference)
    except (SolverError, NormalizationError, HermiticityError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    Path(args.out).write_text(record_to_csv(record), encoding="utf-8")
    last = record.entries[-1]
    print(f"status={record.status} iterations={last.iteration} "
          f"energy={_fmt(last.energy)} error={_fmt(last.error)} "
          f"experiments={last.cum_experiments} cnots={last.cum_cnots}")
    print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_exact(args) -> int:
    try:
        ham = hamfile.load(args.hamiltonian)
    except OSError as exc:
        print(f"cannot read {args.hamiltonian}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except hamfile.HamiltonianFileError as exc:
        print(f"{args.hamiltonian}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        result = exact_ground_energy(ham.to_pauli_sum(),
                                     particle_sector=ham.n_electrons)
    except (SolverError, ValueError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    print(f"{result.ground_energy:.12g}")
    return EXIT_OK


def _cmd_verify_circuits(_args) -> int:
    deviation = circuits.matrix_vs_exponential_deviation()
    ok_a = deviation < 1e-12
    print(f"[{'pass' if ok_a else 'FAIL'}] rotation matrices vs string "
          f"exponentials on random states: max deviation {deviation:.3e}")
    for check in (circuits.verify_single_circuit(),
                  circuits.verify_double_circuit()):
        status = "pass" if check.passed else "FAIL"
        print(f"[{status}] {check.name}")
        if check.matches:
            for m in check.matches:
                print(f"    matches with qubit order {m.qubit_order}, "
                      f"{m.time_direction}, circuit angle = {m.angle_scale}x "
                      f"(max deviation {m.max_deviation:.3e})")
        else:
            print("    no match under any searched convention")
    return EXIT_OK


def _cmd_bench(args) -> int:
    fixture_dir = Path(args.fixtures)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = sorted(fixture_dir.glob("*.json"))
    if not paths:
        print(f"no fixtures in {fixture_dir}", file=sys.stderr)
        return EXIT_USAGE
    failures = 0
    for path in paths:
        try:
            ham = hamfile.load(path)
        except (OSError, hamfile.HamiltonianFileError) as exc:
            print(f"[fail] {path.name}: {exc}")
            failures += 1
            continue
        reference = _reference_energy(ham)
        curves = {}
        for pool in POOL_KINDS:
            for optimizer in OPTIMIZER_KINDS:
                cell = f"{path.stem}__{pool}__{optimizer}"
                config = AdaptConfig(conv_threshold=args.conv_threshold,
                                     max_iterations=args.max_iterations)
                try:
                    record = run_adapt(ham.to_pauli_sum(), ham.n_electrons,
                                       pool, optimizer_kind=optimizer,
                                       selector_kind="energy", config=config,
                                       exact_energy=reference)
                except (SolverError, NormalizationError,
                        HermiticityError) as exc:
                    print(f"[fail] {cell}: {exc}")
                    failures += 1
                    continue
                out_csv = out_dir / f"{cell}.csv"
                out_csv.write_text(record_to_csv(record), encoding="utf-8")
                last = record.entries[-1]
                curves[(pool, optimizer)] = [
                    (e.error, e.cum_experiments, e.cum_cnots)
                    for e in record.entries]
                print(f"[ok]   {cell}: status={record.status} "
                      f"error={_fmt(last.error)} "
                      f"experiments={last.cum_experiments} "
                      f"cnots={last.cum_cnots}")
        if curves and not args.no_plots:
            from .plots import render_convergence
            fig_path = out_dir / f"{path.stem}_convergence.png"
            render_convergence(ham.molecule or path.stem, curves, fig_path)
            print(f"[ok]   figure {fig_path}")
    return EXIT_OK if failures == 0 else EXIT_NUMERICAL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paravqe",
                     description="Adaptive VQE statevector simulator with "
                                 "parabolic optimizers")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one adaptive VQE configuration")
    run.add_argument("--hamiltonian", required=True)
    run.add_argument("--pool", required=True, choices=POOL_KINDS)
    run.add_argument("--optimizer", default="parabolic", choices=OPTIMIZER_KINDS)
    run.add_argument("--selector", default="energy", choices=SELECTOR_KINDS)
    run.add_argument("--conv-threshold", type=float, default=1e-9)
    run.add_argument("--max-iterations", type=int, default=50)
    run.add_argument("--out", required=True)
    run.set_defaults(func=_cmd_run)

    exact = sub.add_parser("exact", help="print the exact ground energy")
    exact.add_argument("--hamiltonian", required=True)
    exact.set_defaults(func=_cmd_exact)

    verify = sub.add_parser("verify-circuits",
                            help="check circuit/operator identities")
    verify.set_defaults(func=_cmd_verify_circuits)

    bench = sub.add_parser("bench",
                           help="pool x optimizer grid over fixture files")
    bench.add_argument("--fixtures", required=True)
    bench.add_argument("--out", required=True)
    bench.add_argument("--conv-threshold", type=float, default=1e-9)
    bench.add_argument("--max-iterations", type=int, default=50)
    bench.add_argument("--no-plots", action="store_true",
                       help="skip figure rendering")
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
