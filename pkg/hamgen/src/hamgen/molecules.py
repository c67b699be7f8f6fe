"""Molecule registry: fixed in-repo geometries (Angstrom).

The source set gives no geometries, so these are standard experimental
equilibrium structures; energies are therefore fixture-relative and every
downstream check compares against the files' own reference fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .basis import ANGSTROM_TO_BOHR, ATOMIC_NUMBER, ZETA


@dataclass(frozen=True)
class MoleculeSpec:
    name: str
    atoms: tuple            # ((symbol, (x, y, z) Angstrom), ...)
    charge: int = 0
    multiplicity: int = 1
    label: str = ""

    def __post_init__(self):
        for sym, xyz in self.atoms:
            if sym not in ZETA:
                raise ValueError(f"no STO-3G data for element {sym!r}")
            if not all(math.isfinite(c) for c in xyz):
                raise ValueError(f"non-finite coordinate on {sym}")
        if self.multiplicity != 1:
            raise ValueError("only closed-shell singlets are supported")

    @property
    def n_electrons(self) -> int:
        return sum(ATOMIC_NUMBER[sym] for sym, _ in self.atoms) - self.charge

    def atoms_bohr(self):
        return [(sym, tuple(c * ANGSTROM_TO_BOHR for c in xyz))
                for sym, xyz in self.atoms]


def _h2o_geometry(r_oh=0.958, angle_deg=104.5):
    half = math.radians(angle_deg) / 2.0
    return (("O", (0.0, 0.0, 0.0)),
            ("H", (r_oh * math.sin(half), 0.0, r_oh * math.cos(half))),
            ("H", (-r_oh * math.sin(half), 0.0, r_oh * math.cos(half))))


MOLECULES = {
    "H2": MoleculeSpec("H2", (("H", (0.0, 0.0, 0.0)),
                              ("H", (0.0, 0.0, 0.74))),
                       label="H2 STO-3G d=0.74A"),
    "He": MoleculeSpec("He", (("He", (0.0, 0.0, 0.0)),),
                       label="He STO-3G"),
    "H4": MoleculeSpec("H4", tuple(("H", (0.0, 0.0, 0.90 * i))
                                   for i in range(4)),
                       label="H4 linear STO-3G d=0.90A"),
    "H2-pair": MoleculeSpec("H2-pair",
                            (("H", (0.0, 0.0, 0.0)),
                             ("H", (0.0, 0.0, 0.74)),
                             ("H", (0.0, 0.0, 6.0)),
                             ("H", (0.0, 0.0, 6.80))),
                            label="2xH2 STO-3G (0.74A and 0.80A bonds, "
                                  "6A apart)"),
    "HF": MoleculeSpec("HF", (("F", (0.0, 0.0, 0.0)),
                              ("H", (0.0, 0.0, 0.917))),
                       label="HF STO-3G d=0.917A"),
    "LiH": MoleculeSpec("LiH", (("Li", (0.0, 0.0, 0.0)),
                                ("H", (0.0, 0.0, 1.595))),
                        label="LiH STO-3G d=1.595A"),
    "H2O": MoleculeSpec("H2O", _h2o_geometry(),
                        label="H2O STO-3G r=0.958A a=104.5deg"),
    "BeH2": MoleculeSpec("BeH2", (("Be", (0.0, 0.0, 0.0)),
                                  ("H", (0.0, 0.0, 1.326)),
                                  ("H", (0.0, 0.0, -1.326))),
                         label="BeH2 linear STO-3G d=1.326A"),
}
