"""hamgen command line: `hamgen --molecule <name> --out <path>`."""

from __future__ import annotations

import argparse
import sys

from .generate import generate
from .molecules import MOLECULES
from .scf import ScfError


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hamgen",
        description="Generate STO-3G qubit-Hamiltonian fixtures with "
                    "Hartree-Fock and FCI reference energies")
    parser.add_argument("--molecule", required=True,
                        choices=sorted(MOLECULES),
                        help="registered molecule name")
    parser.add_argument("--out", required=True, help="output JSON path")
    args = parser.parse_args(argv)
    try:
        result = generate(MOLECULES[args.molecule], args.out)
    except ScfError as exc:
        print(f"SCF failure: {exc}", file=sys.stderr)
        return 1
    fci = "" if result.fci_energy is None else f" fci={result.fci_energy:.10f}"
    print(f"{args.molecule}: qubits={result.n_qubits} "
          f"electrons={result.n_electrons} terms={len(result.terms)} "
          f"hf={result.hf_energy:.10f}{fci}")
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
